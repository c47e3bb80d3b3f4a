#include "toric/error.hpp"

namespace toric {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::RaysDoNotSpan: return "RaysDoNotSpan";
    case Errc::NotPrimitiveSystem: return "NotPrimitiveSystem";
    case Errc::NotABasis: return "NotABasis";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidFan: return "InvalidFan";
    case Errc::NotComplete: return "NotComplete";
    case Errc::DegenerateChern: return "DegenerateChern";
    case Errc::Unbounded: return "Unbounded";
    case Errc::EmptyPolytope: return "EmptyPolytope";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotLattice: return "NotLattice";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotDelzant: return "NotDelzant";
    case Errc::NonGenericXi: return "NonGenericXi";
    case Errc::MismatchedInput: return "MismatchedInput";
    case Errc::NotACurveClass: return "NotACurveClass";
    case Errc::NotACone: return "NotACone";
    case Errc::OutsideU: return "OutsideU";
    case Errc::WrongLength: return "WrongLength";
    case Errc::NotInChart: return "NotInChart";
    case Errc::DegenerateMobius: return "DegenerateMobius";
    case Errc::InvalidLift: return "InvalidLift";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::InfinityConditionFails: return "InfinityConditionFails";
    case Errc::BadExtension: return "BadExtension";
    case Errc::NotFano: return "NotFano";
    case Errc::DegreeNotDivisible: return "DegreeNotDivisible";
    case Errc::InhomogeneousClass: return "InhomogeneousClass";
    case Errc::ChernTooSmall: return "ChernTooSmall";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnknownClass: return "UnknownClass";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace toric
