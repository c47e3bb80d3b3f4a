#pragma once

// Quantum homology of a Fano toric manifold over Lambda_X = Z2[q, q^-1] and,
// through the degree-doubling isomorphism, of its real Lagrangian over
// Lambda_R = Z2[t, t^-1].
//
// The quantum Stanley-Reisner relations are
//   prod_{i in P} x_i = q^{d_P} prod_j x_j^{c_j}
// where sum_{i in P} v_i = sum_j c_j v_j in its minimal cone. Signs do not
// matter over Z2. Products are normal forms in Z2[x_free, q] with q a genuine
// variable of weight C_X; negative q powers only appear in presentation.

#include <cstdint>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/homology.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct LaurentRing {
  char variable = 'q';
  long variable_degree = -2;  // homological degree of the variable

  /// Lambda_R with |t| = -N_R, Lambda_X with |q| = -2 C_X. Throws
  /// ValidationError on a zero degree.
  static LaurentRing real(long n_r);
  static LaurentRing ambient(long c_x);
  /// "1", "t", "t^3", "q^-1".
  std::string power_label(long k) const;
};

struct QuantumRelation {
  IndexSet collection;          // P
  std::vector<std::uint32_t> rhs_exponents;  // c_j for every ray
  std::uint32_t q_power = 0;    // d_P
};

/// One relation per primitive collection. Throws NotFano, DegreeNotDivisible.
std::vector<QuantumRelation> quantum_relations(const Fan& fan);

struct QHTerm {
  std::size_t codegree = 0;  // of the classical basis element
  std::size_t index = 0;     // position in HomologyRing::basis(codegree)
  long power = 0;            // of q (or t)
  auto operator<=>(const QHTerm&) const = default;
};

/// GF(2) sum of basis classes times powers of the Laurent variable, all of
/// the same total cohomological degree codegree + 2 C_X power.
struct QHClass {
  long degree = 0;
  std::vector<QHTerm> terms;  // sorted, no repeats
  bool is_zero() const { return terms.empty(); }
  bool operator==(const QHClass&) const = default;
};

class QuantumRing {
 public:
  /// Throws InvalidFan, NotComplete, NotFano, DegreeNotDivisible.
  explicit QuantumRing(const Fan& fan);

  const HomologyRing& classical() const noexcept { return classical_; }
  const std::vector<QuantumRelation>& relations() const noexcept { return relations_; }
  long chern() const noexcept { return chern_; }
  LaurentRing coefficients() const { return LaurentRing::ambient(chern_); }

  /// Variables: the free rays of the classical ring, then q.
  const gf2::PolyRing& poly_ring() const noexcept { return ring_; }
  const std::vector<gf2::Polynomial>& groebner_basis() const noexcept { return groebner_; }

  QHClass zero(long degree) const { return QHClass{degree, {}}; }
  QHClass unit() const;
  QHClass basis_class(std::size_t codegree, std::size_t index, long power = 0) const;
  QHClass divisor(std::size_t i) const;
  QHClass from_classical(const HomologyClass& c, long power = 0) const;
  /// The q^0 part, as a classical class of the same degree.
  HomologyClass classical_part(const QHClass& c) const;

  /// Throws InhomogeneousClass if either factor mixes degrees.
  QHClass product(const QHClass& a, const QHClass& b) const;

  /// E.g. "D3^2 + [X]*q". `unit_name` and `point_name` replace "[X]" and "[pt]".
  std::string label(const QHClass& c, const std::string& unit_name = "[X]",
                    const std::string& point_name = "[pt]") const;
  std::string basis_label(std::size_t codegree, std::size_t index,
                          const std::string& unit_name = "[X]",
                          const std::string& point_name = "[pt]") const;

 private:
  void check_homogeneous(const QHClass& c) const;
  QHClass from_polynomial(const gf2::Polynomial& f, long shift, long degree) const;

  HomologyRing classical_;
  std::vector<QuantumRelation> relations_;
  long chern_ = 0;
  gf2::PolyRing ring_{{}};
  std::vector<gf2::Polynomial> divisor_images_;
  std::vector<gf2::Polynomial> groebner_;
};

inline QHClass quantum_product(const QuantumRing& ring, const QHClass& a, const QHClass& b) {
  return ring.product(a, b);
}

struct RealBasisElement {
  std::size_t degree = 0;    // homological degree in R
  std::size_t codegree = 0;  // cohomological degree of the matching class of X
  std::size_t index = 0;
  std::string label;
};

struct RealProduct {
  std::size_t left = 0, right = 0;  // indices into the basis list
  std::vector<std::pair<std::size_t, long>> result;  // (basis element, t power)
};

struct RealQuantumTable {
  long minimal_maslov = 0;  // N_R = C_X
  LaurentRing coefficients;
  std::vector<RealBasisElement> basis;
  std::vector<RealProduct> products;  // all unordered pairs left <= right
  std::string label(const std::vector<std::pair<std::size_t, long>>& value) const;
};

/// Structure constants of QH(R; Lambda_R) transported from QH(X; Lambda_X)
/// by halving degrees and t <-> q. Throws ChernTooSmall when C_X < 2.
RealQuantumTable qh_real(const Fan& fan, const std::string& unit_name = "[R]");

struct WidenessSummary {
  long minimal_maslov = 0;
  std::vector<std::size_t> betti_R;
  std::vector<std::size_t> rank_mod;  // rank of QH_k(R) for k = 0 .. N_R - 1
  bool wide = false;                  // Morse counts match H(X; Z2)
  std::size_t displacement_bound = 0;
};

/// Throws ChernTooSmall, plus the errors of morse_profile.
WidenessSummary wideness_summary(const Fan& fan, const Polytope& p, const IntVector& xi);

}  // namespace toric
