#include "toric/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

IntVector make_int_vector(std::initializer_list<long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch,
                "pairing vectors of length " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    Integer ax = abs(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
  }
  return g;
}

bool is_primitive(std::span<const Integer> v) { return gcd_of(v) == 1; }

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(Errc::DimensionMismatch, "row " + std::to_string(i) + " has length " +
                                               std::to_string(rows[i].size()) +
                                               ", expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw Error(Errc::DimensionMismatch, "matrix product of incompatible shapes");
  }
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(std::span<const Integer> v) const {
  if (cols_ != v.size()) {
    throw Error(Errc::DimensionMismatch, "matrix-vector product of incompatible shapes");
  }
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

// ---------------------------------------------------------------------------

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// q = floor(a / b) for b > 0
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
    // Euclid on column c over rows r..end until a single nonzero remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        if (best == rows || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == rows) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& rays) {
  const std::size_t n_rays = rays.rows();
  const std::size_t dim = rays.cols();
  if (n_rays == 0) {
    if (dim == 0) return {};
    throw Error(Errc::RaysDoNotSpan, "no rays given in dimension " + std::to_string(dim));
  }
  HermiteForm hnf = hermite_normal_form(rays);
  if (hnf.rank() < dim) {
    throw Error(Errc::RaysDoNotSpan, "rays have rank " + std::to_string(hnf.rank()) +
                                         " < " + std::to_string(dim));
  }
  std::vector<IntVector> basis;
  for (std::size_t i = hnf.rank(); i < n_rays; ++i) basis.push_back(hnf.u.row(i));
  return basis;
}

std::vector<IntVector> extend_to_basis(std::span<const IntVector> vectors, std::size_t dim) {
  const std::size_t k = vectors.size();
  if (k > dim) {
    throw Error(Errc::DimensionMismatch,
                std::to_string(k) + " vectors cannot be independent in Z^" + std::to_string(dim));
  }
  if (k == 0) return IntMatrix::identity(dim).row_vectors();

  // U * M^T = [T; 0]; completion exists iff T is unimodular, i.e. all pivots 1,
  // in which case the trailing columns of U^{-1} complete the basis.
  IntMatrix mt = IntMatrix::from_rows(vectors, dim).transpose();
  HermiteForm hnf = hermite_normal_form(mt);
  if (hnf.rank() < k) {
    throw Error(Errc::DimensionMismatch, "vectors are linearly dependent (rank " +
                                             std::to_string(hnf.rank()) + ")");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (hnf.h(i, hnf.pivot_cols[i]) != 1) {
      std::string list;
      for (const auto& v : vectors) list += to_string(v);
      throw Error(Errc::NotPrimitiveSystem,
                  list + " spans a sublattice of index " +
                      [&] {
                        Integer idx = 1;
                        for (std::size_t j = 0; j < k; ++j) idx *= hnf.h(j, hnf.pivot_cols[j]);
                        return idx.get_str();
                      }());
    }
  }
  IntMatrix w = unimodular_inverse(hnf.u);
  std::vector<IntVector> completion;
  for (std::size_t j = k; j < dim; ++j) completion.push_back(w.col(j));
  return completion;
}

DualBasis dual_basis(std::span<const IntVector> basis) {
  const std::size_t n = basis.size();
  for (const auto& v : basis) {
    if (v.size() != n) {
      throw Error(Errc::NotABasis, std::to_string(n) + " vectors of length " +
                                       std::to_string(v.size()) + " are not a square system");
    }
  }
  IntMatrix b = IntMatrix::from_rows(basis, n);
  IntMatrix inv = unimodular_inverse(b);
  DualBasis out;
  out.primal.assign(basis.begin(), basis.end());
  for (std::size_t i = 0; i < n; ++i) out.dual.push_back(inv.col(i));
  return out;
}

// ---------------------------------------------------------------------------

RatVector to_rational(std::span<const Integer> v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(const RatMatrix& rows) {
  if (rows.empty()) return 0;
  RatMatrix a = rows;
  return rref(a, a.front().size()).size();
}

std::size_t rational_rank(const IntMatrix& m) { return hermite_normal_form(m).rank(); }

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "solve_linear: rhs length");
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols) throw Error(Errc::DimensionMismatch, "solve_linear: ragged rows");
    aug[i].push_back(b[i]);
  }
  auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVector x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::NotABasis, "non-square system");
  const std::size_t n = m.rows();
  Integer det = determinant(m);
  if (abs(det) != 1) {
    std::string list;
    for (std::size_t i = 0; i < n; ++i) list += to_string(m.row(i));
    throw Error(Errc::NotABasis, list + " has determinant " + det.get_str());
  }
  RatMatrix aug(n, RatVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }
  rref(aug, n);
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j].get_num();
  return inv;
}

}  // namespace toric
