#pragma once

// The Z2 homology ring of a smooth complete toric manifold, presented as
// Z2[D_1..D_N] / (I + J): linear relations I from the dual lattice, the
// Stanley-Reisner ideal J from primitive collections.
//
// Internally everything is graded cohomologically (deg D_i = 2). The
// homological degree of a class of codegree c is 2n - c.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/gf2_poly.hpp"

namespace toric {

struct RingPresentation {
  std::size_t num_generators = 0;  // N
  std::size_t dim = 0;             // n
  /// Rays of the max cone whose divisors are eliminated by the linear relations.
  IndexSet eliminated;
  /// n relations over GF(2): row k holds <eps_k, v_i> mod 2, eps the dual
  /// basis of the eliminated cone.
  std::vector<std::vector<std::uint8_t>> linear_relations;
  std::vector<IndexSet> sr_generators;
};

struct HomologyClass {
  std::size_t codegree = 0;           // cohomological degree, even
  std::vector<std::uint8_t> coords;   // GF(2) coordinates in the graded basis
  bool is_zero() const;
  long homological_degree(std::size_t dim) const {
    return 2 * static_cast<long>(dim) - static_cast<long>(codegree);
  }
  bool operator==(const HomologyClass&) const = default;
};

class HomologyRing {
 public:
  /// Throws InvalidFan or NotComplete.
  explicit HomologyRing(const Fan& fan);

  const Fan& fan() const noexcept { return fan_; }
  const RingPresentation& presentation() const noexcept { return presentation_; }
  std::size_t dim() const noexcept { return presentation_.dim; }

  /// Rays whose divisors survive as polynomial variables, in variable order.
  const std::vector<std::size_t>& free_rays() const noexcept { return free_rays_; }
  const gf2::PolyRing& poly_ring() const noexcept { return ring_; }
  const std::vector<gf2::Polynomial>& groebner_basis() const noexcept { return groebner_; }

  std::size_t rank(std::size_t codegree) const;
  std::size_t total_rank() const;
  /// Basis monomials (in the free variables) of the given codegree.
  const std::vector<gf2::Exponents>& basis(std::size_t codegree) const;
  /// Human-readable label such as "D3^2" or "1".
  std::string monomial_label(const gf2::Exponents& m) const;

  HomologyClass zero(std::size_t codegree) const;
  HomologyClass unit() const;        // [X]
  HomologyClass point() const;       // [pt]
  HomologyClass divisor(std::size_t i) const;
  HomologyClass basis_class(std::size_t codegree, std::size_t index) const;

  /// Image of D_i in the reduced variables.
  const gf2::Polynomial& divisor_polynomial(std::size_t i) const { return divisor_images_.at(i); }

  gf2::Polynomial to_polynomial(const HomologyClass& c) const;
  /// Normal form of a homogeneous polynomial in the free variables.
  HomologyClass from_polynomial(const gf2::Polynomial& f, std::size_t codegree) const;

 private:
  Fan fan_;
  RingPresentation presentation_;
  std::vector<std::size_t> free_rays_;
  gf2::PolyRing ring_{{}};
  std::vector<gf2::Polynomial> divisor_images_;
  std::vector<gf2::Polynomial> groebner_;
  std::vector<std::vector<gf2::Exponents>> basis_;  // indexed by codegree / 2
};

/// Intersection product. Products landing below homological degree 0 are
/// returned as the zero class of that codegree.
HomologyClass intersection_product(const HomologyRing& ring, const HomologyClass& a,
                                   const HomologyClass& b);

/// c1 paired with the curve class lambda: sum_j lambda_j. Throws
/// NotACurveClass unless sum_j lambda_j v_j = 0.
Integer chern_pairing(const Fan& fan, const IntVector& lambda);

struct DivisorExpansion {
  IndexSet zero_set;                  // I_0
  std::vector<IntVector> extension;   // completes {v_i : i in I_0} to a basis
  std::vector<IntVector> epsilons;    // dual elements, one per i in I_0 (in order)
  /// pairing[k][j] = <eps_{I_0[k]}, v_j> for every ray j.
  std::vector<std::vector<Integer>> pairing;
};

/// Expresses [D_i], i in I_0, through the remaining divisors:
/// [D_i] = -sum_{j not in I_0} <eps_i, v_j> [D_j].
/// Throws NotACone, BadExtension.
DivisorExpansion divisor_expansion(const Fan& fan, const IndexSet& zero_set,
                                   const std::optional<std::vector<IntVector>>& extension = {});

}  // namespace toric
