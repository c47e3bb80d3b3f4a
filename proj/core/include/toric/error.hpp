#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

// Every domain failure carries one of these names plus the offending datum.
enum class Errc {
  RaysDoNotSpan,
  NotPrimitiveSystem,
  NotABasis,
  DimensionMismatch,
  InvalidFan,
  NotComplete,
  DegenerateChern,
  Unbounded,
  EmptyPolytope,
  NotFullDimensional,
  NotSimple,
  NotLattice,
  ZeroVector,
  NotDelzant,
  NonGenericXi,
  MismatchedInput,
  NotACurveClass,
  NotACone,
  OutsideU,
  WrongLength,
  NotInChart,
  DegenerateMobius,
  InvalidLift,
  NotApplicable,
  InfinityConditionFails,
  BadExtension,
  NotFano,
  DegreeNotDivisible,
  InhomogeneousClass,
  ChernTooSmall,
  ParseError,
  ValidationError,
  UnknownClass,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace toric
