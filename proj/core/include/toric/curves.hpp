#pragma once

// Real holomorphic discs described by factored polynomial lifts
//   w_i(z) = a_i * prod_j (z - p_ij)(z - conj p_ij) * prod_k (z - q_ik)
// of their doubles to toric homogeneous coordinates, and their Maslov
// indices.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/homology.hpp"

namespace toric {

using Complex = std::complex<double>;

struct LiftComponent {
  bool zero = false;
  double leading = 1.0;
  std::vector<Complex> complex_roots;  // Im > 0, one per conjugate pair
  std::vector<double> real_roots;

  static LiftComponent zero_component();
  static LiftComponent constant(double a = 1.0);

  std::size_t alpha() const noexcept { return complex_roots.size(); }
  std::size_t beta() const noexcept { return real_roots.size(); }
  /// 2 alpha + beta; zero for identically vanishing components.
  std::size_t degree() const noexcept { return zero ? 0 : 2 * alpha() + beta(); }
  Complex evaluate(Complex z) const;
  /// True iff z is one of the stored roots (or a conjugate of one).
  bool vanishes_at(Complex z) const;
};

class RealDiscLift {
 public:
  RealDiscLift() = default;
  /// Throws InvalidLift if a leading coefficient is zero or a complex root is
  /// not in the open upper half plane.
  explicit RealDiscLift(std::vector<LiftComponent> components);

  static RealDiscLift constant(std::size_t num_rays);

  std::size_t size() const noexcept { return components_.size(); }
  const std::vector<LiftComponent>& components() const noexcept { return components_; }
  const LiftComponent& component(std::size_t i) const { return components_.at(i); }
  IndexSet zero_set() const;
  std::vector<std::size_t> degrees() const;
  std::vector<Complex> evaluate(Complex z) const;

 private:
  std::vector<LiftComponent> components_;
};

struct RootStratum {
  Complex location;
  IndexSet vanishing;  // I_z = I_0 plus components vanishing at the location
};

struct LiftValidation {
  IndexSet zero_set;
  std::vector<RootStratum> strata;
};

/// Checks that the lift lands in U: I_0 and every I_z at a root span cones.
/// Throws WrongLength or OutsideU.
LiftValidation validate_lift(const Fan& fan, const RealDiscLift& lift);

/// Affine chart of a max cone: (prod_i z_i^{<nu_k, v_i>})_k with nu dual to
/// the cone's rays. Throws NotInChart when some z_i outside the cone vanishes.
std::vector<Complex> chart_coords(const Fan& fan, const Cone& max_cone,
                                  std::span<const Complex> point);

/// z -> (a z + b) / (c z + d) with real entries.
struct Mobius {
  Rational a = 1, b = 0, c = 0, d = 1;
  Complex apply(Complex z) const;
  Rational determinant() const { return a * d - b * c; }
  std::string to_string() const;
};

/// Candidate reparametrisation z -> (r z - 1) / z moving the point at
/// infinity to a real r avoiding every real root of the lift.
Mobius suggested_reparametrization(const RealDiscLift& lift);

struct InfinityStratum {
  IndexSet indices;                  // I_infinity = I_0 union the limit cone
  IndexSet limit_cone;               // rays of the minimal star cone containing -m
  std::vector<Integer> multiplicity; // per ray: order of contact at infinity
  IntVector degree_vector;           // m-bar in coordinates of Z^n / span(v_{I_0})
  bool clear() const { return is_zero(degree_vector); }
};

/// Decides where u(infinity) lies from the leading-degree vector. Throws
/// InvalidLift, NotComplete.
InfinityStratum infinity_stratum(const Fan& fan, const RealDiscLift& lift);

/// w_i(phi(z)) * (c z + d)^{k_i}, with k chosen so the rescaling lies in the
/// torus K_C; the result lifts u o phi. Orientation-reversing maps yield the
/// conjugate disc. Throws DegenerateMobius, InvalidLift.
RealDiscLift reparametrize(const Fan& fan, const RealDiscLift& lift, const Mobius& phi);

enum class MaslovMethod { ZeroCount, GeneralFormula };

struct MaslovResult {
  Integer mu;
  MaslovMethod method = MaslovMethod::ZeroCount;
  IndexSet zero_set;
  std::vector<IntVector> extension;  // only for the general formula
};

/// sum_i (2 alpha_i + beta_i). Throws NotApplicable unless I_0 is empty and
/// u(infinity) avoids every divisor.
MaslovResult maslov_zero_count(const Fan& fan, const RealDiscLift& lift);

/// sum_{j not in I_0} (1 - sum_{i in I_0} <eps_i, v_j>) (2 alpha_j + beta_j).
/// Throws NotACone, InfinityConditionFails, BadExtension.
MaslovResult maslov_general(const Fan& fan, const RealDiscLift& lift,
                            const std::optional<std::vector<IntVector>>& extension = {});

struct DoubleSymmetryReport {
  std::size_t samples = 0;
  double max_deviation = 0.0;
  bool symmetric = false;
  IntVector curve_class;  // intersection numbers of the double with each D_j
  Integer c1 = 0;
  Integer mu = 0;
  std::optional<Mobius> reparametrization;  // used when u(infinity) meets a divisor
  bool agrees = false;
};

inline constexpr double kSymmetryTolerance = 1e-9;

/// Numerical check of u#(conj z) = tau(u#(z)) plus the exact identity
/// c1(u#) = mu(u). Throws InvalidLift.
DoubleSymmetryReport verify_double_symmetry(const Fan& fan, const RealDiscLift& lift,
                                            std::size_t samples, std::uint64_t seed = 1);

}  // namespace toric
