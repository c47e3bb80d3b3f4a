#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace toric::oracle {

Integer leibniz_determinant(const std::vector<IntVector>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= rows[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::size_t rank(const std::vector<RatVector>& input) {
  auto m = input;
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t rank(const std::vector<IntVector>& rows) {
  std::vector<RatVector> q;
  for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
  return rank(q);
}

std::vector<IntVector> small_kernel_vectors(const Fan& fan, long box) {
  const std::size_t nr = fan.num_rays();
  std::vector<IntVector> out;
  IntVector lambda(nr, Integer(-box));
  while (true) {
    IntVector image(fan.dim(), Integer(0));
    for (std::size_t j = 0; j < nr; ++j)
      for (std::size_t k = 0; k < fan.dim(); ++k) image[k] += lambda[j] * fan.ray(j)[k];
    if (std::all_of(image.begin(), image.end(), [](const Integer& x) { return x == 0; })) out.push_back(lambda);
    std::size_t pos = 0;
    while (pos < nr && lambda[pos] == box) lambda[pos++] = -box;
    if (pos == nr) break;
    lambda[pos] += 1;
  }
  return out;
}

bool in_integer_span(const std::vector<IntVector>& basis, const IntVector& v) {
  // Solve sum_k c_k b_k = v over Q by elimination on the augmented system.
  const std::size_t k = basis.size(), n = v.size();
  std::vector<RatVector> m(n, RatVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < k; ++c) m[i][c] = basis[c][i];
    m[i][k] = v[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    Rational piv = m[r][c];
    for (auto& x : m[r]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t t = 0; t <= k; ++t) m[i][t] -= f * m[r][t];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (m[i][k] != 0) return false;
  for (std::size_t i = 0; i < r; ++i)
    if (m[i][k].get_den() != 1) return false;
  return true;
}

namespace {

bool is_face(const Fan& fan, const IndexSet& s) {
  for (const auto& c : fan.max_cones())
    if (std::includes(c.rays.begin(), c.rays.end(), s.begin(), s.end())) return true;
  return false;
}

}  // namespace

std::vector<IndexSet> primitive_collections(const Fan& fan) {
  const std::size_t nr = fan.num_rays();
  std::vector<IndexSet> out;
  for (unsigned long mask = 1; mask < (1UL << nr); ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < nr; ++i)
      if (mask & (1UL << i)) s.push_back(i);
    if (is_face(fan, s)) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
      IndexSet t = s;
      t.erase(t.begin() + static_cast<long>(drop));
      if (!is_face(fan, t)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer minimal_chern(const Fan& fan, long box) {
  Integer g = 0;
  for (const auto& lambda : small_kernel_vectors(fan, box)) {
    Integer s = 0;
    for (const auto& x : lambda) s += x;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
  }
  return g;
}

std::vector<std::size_t> h_vector(const Fan& fan) {
  const std::size_t n = fan.dim();
  // f_{i-1}: number of cones with i rays (f_{-1} = 1 for the empty cone).
  std::vector<long> f(n + 1, 0);
  for (const auto& c : fan.all_cones()) f[c.rays.size()] += 1;
  auto binom = [](long a, long b) {
    if (b < 0 || b > a) return 0L;
    long r = 1;
    for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::vector<std::size_t> h(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    long s = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      long sign = (k - i) % 2 ? -1 : 1;
      s += sign * binom(static_cast<long>(n - i), static_cast<long>(k - i)) * f[i];
    }
    h[k] = static_cast<std::size_t>(s);
  }
  return h;
}

int surface_intersection_mod2(const Fan& fan, std::size_t i, std::size_t j) {
  if (i != j) return is_face(fan, make_index_set({i, j})) ? 1 : 0;
  // Neighbours u, w of v_i satisfy u + w = b v_i; then D_i^2 = -b.
  std::vector<std::size_t> nb;
  for (std::size_t k = 0; k < fan.num_rays(); ++k)
    if (k != i && is_face(fan, make_index_set({i, k}))) nb.push_back(k);
  const auto& u = fan.ray(nb.at(0));
  const auto& w = fan.ray(nb.at(1));
  const auto& v = fan.ray(i);
  Integer b = v[0] != 0 ? (u[0] + w[0]) / v[0] : (u[1] + w[1]) / v[1];
  return mpz_odd_p(b.get_mpz_t()) ? 1 : 0;
}

bool balanced(const Fan& fan, const IndexSet& zero_set, const std::vector<std::size_t>& degrees) {
  std::vector<IntVector> gens;
  for (auto i : zero_set) gens.push_back(fan.ray(i));
  IntVector m(fan.dim(), Integer(0));
  for (std::size_t j = 0; j < degrees.size(); ++j)
    for (std::size_t k = 0; k < fan.dim(); ++k) m[k] += Integer(static_cast<unsigned long>(degrees[j])) * fan.ray(j)[k];
  std::size_t r0 = rank(gens);
  gens.push_back(m);
  return rank(gens) == r0;
}

}  // namespace toric::oracle
