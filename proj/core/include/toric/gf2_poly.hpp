#pragma once

// Multivariate polynomials over GF(2) with a weighted graded reverse
// lexicographic order (x_0 > x_1 > ... > x_{k-1}), and Buchberger's
// algorithm for reduced Groebner bases.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace toric::gf2 {

using Exponents = std::vector<std::uint32_t>;

class PolyRing;

/// Sum of distinct monomials, sorted strictly descending in the ring order.
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Exponents>& terms() const noexcept { return terms_; }
  const Exponents& leading() const { return terms_.front(); }
  bool operator==(const Polynomial&) const = default;

 private:
  friend class PolyRing;
  std::vector<Exponents> terms_;
};

class PolyRing {
 public:
  /// weights[i] is the degree of variable i (all positive).
  explicit PolyRing(std::vector<std::uint32_t> weights);

  std::size_t num_vars() const noexcept { return weights_.size(); }
  const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }

  std::uint64_t degree(const Exponents& m) const;
  /// Negative, zero, positive for a < b, a == b, a > b.
  int compare(const Exponents& a, const Exponents& b) const;

  Polynomial zero() const { return {}; }
  Polynomial one() const;
  Polynomial variable(std::size_t i) const;
  Polynomial monomial(Exponents m) const;
  /// Sums a list of monomials; repeated monomials cancel in pairs.
  Polynomial from_terms(std::vector<Exponents> terms) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial mul_monomial(const Polynomial& a, const Exponents& m) const;
  Polynomial pow(const Polynomial& a, std::uint32_t k) const;
  /// Substitute polynomial images for each variable.
  Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) const;

  bool is_homogeneous(const Polynomial& f) const;

  /// Full reduction of f modulo a Groebner basis.
  Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) const;

  /// Reduced Groebner basis, sorted by leading monomial (descending).
  /// max_steps bounds the number of S-pair reductions; 0 means unbounded.
  std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators,
                                         std::size_t max_steps = 0) const;

  /// Monomials of the given weighted degree not divisible by any leading
  /// monomial of the basis, sorted descending.
  std::vector<Exponents> standard_monomials(const std::vector<Polynomial>& basis,
                                            std::uint64_t degree) const;

 private:
  void sort_and_cancel(std::vector<Exponents>& terms) const;

  std::vector<std::uint32_t> weights_;
};

bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
/// b / a; requires divides(a, b).
Exponents quotient(const Exponents& b, const Exponents& a);

}  // namespace toric::gf2
