#pragma once

// Exact integer lattice algebra over Z^n: Hermite normal form, kernels,
// basis completion and dual bases. All arithmetic is arbitrary precision.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

IntVector make_int_vector(std::initializer_list<long> entries);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Integer gcd_of(std::span<const Integer> v);
bool is_primitive(std::span<const Integer> v);
bool is_zero(std::span<const Integer> v);
std::string to_string(std::span<const Integer> v);
std::string to_string(std::span<const Rational> v);
std::string to_string(const Rational& q);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  /// Throws DimensionMismatch if the rows are ragged.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix from_rows(std::span<const IntVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  std::vector<IntVector> row_vectors() const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(std::span<const Integer> v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  /// row(target) += factor * row(source)
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Bareiss fraction-free determinant. Throws DimensionMismatch if not square.
Integer determinant(const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;  // row echelon, positive pivots, entries above pivots reduced
  IntMatrix u;  // unimodular, h = u * m
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Row-style Hermite normal form by Euclidean row reduction. The transform
/// is accumulated explicitly so H = U * M can be replayed.
HermiteForm hermite_normal_form(const IntMatrix& m);

/// Z-basis of ker(pi) where pi: Z^N -> Z^n sends e_j to rays.row(j).
/// Throws RaysDoNotSpan if the rays have rank < n.
std::vector<IntVector> kernel_basis(const IntMatrix& rays);

/// Vectors completing the input to a Z-basis of Z^dim.
/// Throws NotPrimitiveSystem when no completion exists and
/// DimensionMismatch when the input is not linearly independent.
std::vector<IntVector> extend_to_basis(std::span<const IntVector> vectors, std::size_t dim);

struct DualBasis {
  std::vector<IntVector> primal;
  std::vector<IntVector> dual;  // <dual[i], primal[j]> = delta_ij
};

/// Throws NotABasis unless the vectors form a unimodular square system.
DualBasis dual_basis(std::span<const IntVector> basis);

// Exact rational linear algebra used by the geometry modules.

using RatMatrix = std::vector<RatVector>;

std::size_t rational_rank(const RatMatrix& rows);
std::size_t rational_rank(const IntMatrix& m);

/// Solves A x = b exactly. Returns nullopt when inconsistent. When the
/// solution is not unique, free variables are set to zero.
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b);

RatVector to_rational(std::span<const Integer> v);

/// Inverse of a unimodular matrix as an integer matrix. Throws NotABasis.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace toric
