#include "toric/polytope.hpp"

#include <algorithm>
#include <map>

#include "toric/error.hpp"
#include "toric/fourier_motzkin.hpp"

namespace toric {

void check_well_formed(const Polytope& p) {
  if (p.offsets.size() != p.normals.size()) {
    throw Error(Errc::ValidationError, std::to_string(p.normals.size()) + " normals but " +
                                           std::to_string(p.offsets.size()) + " offsets");
  }
  for (std::size_t i = 0; i < p.normals.size(); ++i) {
    if (p.normals[i].size() != p.dim) {
      throw Error(Errc::ValidationError,
                  "facet " + std::to_string(i) + " normal has length " +
                      std::to_string(p.normals[i].size()) + " in dimension " +
                      std::to_string(p.dim));
    }
    if (!is_primitive(p.normals[i])) {
      throw Error(Errc::ValidationError,
                  "facet " + std::to_string(i) + " normal " + to_string(p.normals[i]) +
                      " is not primitive");
    }
  }
}

bool Vertex::is_integral() const {
  return std::all_of(point.begin(), point.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

IntVector Vertex::integral_point() const {
  if (!is_integral()) throw Error(Errc::NotLattice, "vertex " + to_string(point) + " is not integral");
  IntVector out;
  for (const auto& q : point) out.push_back(q.get_num());
  return out;
}

bool is_bounded(const Polytope& p) {
  check_well_formed(p);
  const std::size_t n = p.dim;
  if (rational_rank(IntMatrix::from_rows(p.normals, n)) < n) return false;
  // Recession cone {phi : <phi, v_i> >= 0} must be {0}.
  for (std::size_t k = 0; k < p.num_facets(); ++k) {
    std::vector<fm::Constraint> sys;
    for (std::size_t i = 0; i < p.num_facets(); ++i) {
      sys.push_back({to_rational(p.normals[i]), fm::Relation::GreaterEqual,
                     Rational(i == k ? 1 : 0)});
    }
    if (fm::feasible(std::move(sys), n)) return false;
  }
  return true;
}

namespace {

Rational pair(const RatVector& phi, const IntVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) s += phi[i] * v[i];
  return s;
}

// Visit every k-subset of [0, n).
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Vertex> vertices(const Polytope& p) {
  if (!is_bounded(p)) throw Error(Errc::Unbounded, "facet normals do not positively span R^n");
  const std::size_t n = p.dim;
  std::map<RatVector, IndexSet> found;
  for_each_subset(p.num_facets(), n, [&](const std::vector<std::size_t>& subset) {
    RatMatrix a;
    RatVector b;
    for (std::size_t i : subset) {
      a.push_back(to_rational(p.normals[i]));
      b.push_back(-p.offsets[i]);
    }
    if (rational_rank(a) < n) return;
    auto x = solve_linear(a, b);
    if (!x || found.count(*x)) return;
    IndexSet active;
    for (std::size_t i = 0; i < p.num_facets(); ++i) {
      Rational slack = pair(*x, p.normals[i]) + p.offsets[i];
      if (slack < 0) return;
      if (slack == 0) active.push_back(i);
    }
    found.emplace(std::move(*x), std::move(active));
  });
  if (found.empty()) throw Error(Errc::EmptyPolytope, "no point satisfies all facet inequalities");
  std::vector<Vertex> out;
  for (auto& [pt, act] : found) out.push_back(Vertex{pt, act});
  return out;
}

Fan normal_fan(const Polytope& p) {
  std::vector<Vertex> verts = vertices(p);
  const std::size_t n = p.dim;
  RatMatrix diffs;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    RatVector d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = verts[i].point[k] - verts[0].point[k];
    diffs.push_back(std::move(d));
  }
  if (rational_rank(diffs) < n) {
    throw Error(Errc::NotFullDimensional, "vertices span an affine subspace of dimension " +
                                              std::to_string(rational_rank(diffs)));
  }
  std::vector<IndexSet> cones;
  for (const auto& v : verts) {
    if (v.active_facets.size() != n) {
      throw Error(Errc::NotSimple, "vertex " + to_string(v.point) + " lies on " +
                                       std::to_string(v.active_facets.size()) + " facets");
    }
    cones.push_back(v.active_facets);
  }
  return Fan(n, p.normals, std::move(cones));
}

DelzantReport delzant_check(const Polytope& p) {
  std::vector<Vertex> verts = vertices(p);
  DelzantReport rep;
  for (const auto& v : verts) {
    if (!v.is_integral()) {
      rep.lattice = false;
      rep.certificates.push_back("vertex " + to_string(v.point) + " is not a lattice point");
    }
    if (v.active_facets.size() != p.dim) {
      rep.delzant = false;
      rep.certificates.push_back("vertex " + to_string(v.point) + " is not simple (" +
                                 std::to_string(v.active_facets.size()) + " facets)");
      continue;
    }
    std::vector<IntVector> active;
    for (std::size_t i : v.active_facets) active.push_back(p.normals[i]);
    Integer det = determinant(IntMatrix::from_rows(active, p.dim));
    if (abs(det) != 1) {
      rep.delzant = false;
      rep.certificates.push_back("vertex " + to_string(v.point) + ": normals of facets " +
                                 to_string(v.active_facets) + " have determinant " +
                                 det.get_str());
    }
  }
  return rep;
}

EmbeddingData lattice_points(const Polytope& p) {
  std::vector<Vertex> verts = vertices(p);
  const std::size_t n = p.dim;
  for (const auto& v : verts) {
    if (!v.is_integral()) throw Error(Errc::NotLattice, "vertex " + to_string(v.point) + " is not integral");
  }
  for (std::size_t j = 0; j < p.num_facets(); ++j) {
    if (p.offsets[j].get_den() != 1) {
      throw Error(Errc::NotLattice, "facet " + std::to_string(j) + " offset " +
                                        p.offsets[j].get_str() + " is not integral");
    }
  }
  IntVector lo = verts.front().integral_point();
  IntVector hi = lo;
  for (const auto& v : verts) {
    IntVector pt = v.integral_point();
    for (std::size_t k = 0; k < n; ++k) {
      if (pt[k] < lo[k]) lo[k] = pt[k];
      if (pt[k] > hi[k]) hi[k] = pt[k];
    }
  }
  EmbeddingData out;
  out.dim = n;
  IntVector m = lo;
  while (true) {
    IntVector row;
    bool inside = true;
    for (std::size_t j = 0; j < p.num_facets() && inside; ++j) {
      Integer ld = dot(m, p.normals[j]) + p.offsets[j].get_num();
      if (ld < 0) inside = false;
      row.push_back(ld);
    }
    if (inside) {
      out.lattice_points.push_back(m);
      out.exponents.push_back(std::move(row));
    }
    std::size_t k = 0;
    while (k < n && m[k] == hi[k]) {
      m[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    ++m[k];
  }
  return out;
}

std::vector<Complex> embed(const EmbeddingData& e, std::span<const Complex> toric_coords) {
  std::vector<Complex> out;
  out.reserve(e.exponents.size());
  for (const auto& row : e.exponents) {
    if (row.size() != toric_coords.size()) {
      throw Error(Errc::DimensionMismatch, "embedding expects " + std::to_string(row.size()) +
                                               " toric coordinates");
    }
    Complex value = 1.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      unsigned long k = row[j].get_ui();
      for (unsigned long r = 0; r < k; ++r) value *= toric_coords[j];
    }
    out.push_back(value);
  }
  return out;
}

std::vector<double> moment_map(const EmbeddingData& e, std::span<const Complex> homogeneous) {
  if (homogeneous.size() != e.lattice_points.size()) {
    throw Error(Errc::DimensionMismatch, "moment map expects " +
                                             std::to_string(e.lattice_points.size()) +
                                             " homogeneous coordinates");
  }
  double total = 0.0;
  std::vector<double> acc(e.dim, 0.0);
  for (std::size_t i = 0; i < homogeneous.size(); ++i) {
    double w = std::norm(homogeneous[i]);
    total += w;
    for (std::size_t k = 0; k < e.dim; ++k) acc[k] += w * e.lattice_points[i][k].get_d();
  }
  if (total == 0.0) throw Error(Errc::ZeroVector, "all homogeneous coordinates vanish");
  for (auto& x : acc) x /= total;
  return acc;
}

std::vector<Complex> fixed_point_coordinates(const Polytope& p, const Vertex& vertex) {
  std::vector<Complex> z(p.num_facets(), Complex(1.0, 0.0));
  for (std::size_t i : vertex.active_facets) z.at(i) = 0.0;
  return z;
}

}  // namespace toric
