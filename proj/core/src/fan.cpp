#include "toric/fan.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "toric/error.hpp"
#include "toric/fourier_motzkin.hpp"
#include "toric/polytope.hpp"

namespace toric {

IndexSet make_index_set(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

std::string to_string(const IndexSet& s, bool one_based) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + (one_based ? 1 : 0));
  }
  return out + "}";
}

bool is_subset(const IndexSet& sub, const IndexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Fan::Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<IndexSet> max_cones)
    : dim_(dim), rays_(std::move(rays)) {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (rays_[i].size() != dim_) {
      throw Error(Errc::InvalidFan, "ray " + std::to_string(i) + " has length " +
                                        std::to_string(rays_[i].size()) + " in dimension " +
                                        std::to_string(dim_));
    }
  }
  for (auto& c : max_cones) {
    IndexSet s = make_index_set(std::move(c));
    for (std::size_t idx : s) {
      if (idx >= rays_.size()) {
        throw Error(Errc::InvalidFan, "cone references ray " + std::to_string(idx) + " but only " +
                                          std::to_string(rays_.size()) + " rays exist");
      }
    }
    max_cones_.push_back(Cone{std::move(s)});
  }
}

IntMatrix Fan::ray_matrix() const { return IntMatrix::from_rows(rays_, dim_); }

std::vector<Cone> Fan::all_cones() const {
  std::set<IndexSet> faces;
  faces.insert({});
  for (const auto& c : max_cones_) {
    const std::size_t k = c.rays.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      IndexSet f;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::uint64_t{1} << b)) f.push_back(c.rays[b]);
      faces.insert(std::move(f));
    }
  }
  std::vector<Cone> out;
  for (auto& f : faces) out.push_back(Cone{f});
  return out;
}

std::vector<Cone> Fan::cones_of_dim(std::size_t r) const {
  std::vector<Cone> out;
  for (auto& c : all_cones())
    if (c.rays.size() == r) out.push_back(c);
  return out;
}

bool Fan::is_cone(const IndexSet& rays) const {
  if (rays.empty()) return true;
  return std::any_of(max_cones_.begin(), max_cones_.end(),
                     [&](const Cone& c) { return is_subset(rays, c.rays); });
}

std::optional<Cone> Fan::max_cone_containing(const IndexSet& face) const {
  for (const auto& c : max_cones_)
    if (is_subset(face, c.rays)) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<IntVector> cone_generators(const Fan& fan, const Cone& c) {
  std::vector<IntVector> g;
  for (std::size_t i : c.rays) g.push_back(fan.ray(i));
  return g;
}

// Is there x in sigma and tau whose sigma-coordinate at ray `extra` is positive?
bool improper_intersection(const Fan& fan, const Cone& sigma, const Cone& tau,
                           std::size_t extra) {
  const std::size_t n = fan.dim();
  const std::size_t ks = sigma.rays.size();
  const std::size_t kt = tau.rays.size();
  const std::size_t vars = ks + kt;
  std::vector<fm::Constraint> sys;
  for (std::size_t r = 0; r < n; ++r) {
    fm::Constraint eq{RatVector(vars, Rational(0)), fm::Relation::Equal, 0};
    for (std::size_t a = 0; a < ks; ++a) eq.coeffs[a] = fan.ray(sigma.rays[a])[r];
    for (std::size_t b = 0; b < kt; ++b) eq.coeffs[ks + b] = -fan.ray(tau.rays[b])[r];
    sys.push_back(std::move(eq));
  }
  for (std::size_t v = 0; v < vars; ++v) {
    fm::Constraint nonneg{RatVector(vars, Rational(0)), fm::Relation::GreaterEqual, 0};
    nonneg.coeffs[v] = 1;
    if (v < ks && sigma.rays[v] == extra) nonneg.rhs = 1;
    sys.push_back(std::move(nonneg));
  }
  return fm::feasible(std::move(sys), vars);
}

}  // namespace

FanReport validate_fan(const Fan& fan) {
  FanReport rep;
  const std::size_t n = fan.dim();

  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    if (!is_primitive(fan.ray(i))) {
      rep.primitive = false;
      rep.failures.push_back("ray " + std::to_string(i) + " " + to_string(fan.ray(i)) +
                             " is not primitive");
    }
  }

  std::vector<bool> cone_ok(fan.max_cones().size(), true);
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    const Cone& cone = fan.max_cones()[c];
    auto gens = cone_generators(fan, cone);
    try {
      extend_to_basis(gens, n);
    } catch (const Error& e) {
      rep.smooth = false;
      cone_ok[c] = false;
      rep.failures.push_back("cone " + to_string(cone.rays) + " is not smooth: " + e.detail());
    }
  }

  std::vector<bool> used(fan.num_rays(), false);
  for (const auto& c : fan.max_cones())
    for (std::size_t i : c.rays) used[i] = true;
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    if (!used[i]) {
      rep.closed = false;
      rep.failures.push_back("ray " + std::to_string(i) + " is not a face of any cone");
    }
  }
  for (std::size_t a = 0; a < fan.max_cones().size(); ++a) {
    for (std::size_t b = 0; b < fan.max_cones().size(); ++b) {
      if (a == b) continue;
      const auto& ca = fan.max_cones()[a].rays;
      const auto& cb = fan.max_cones()[b].rays;
      if (is_subset(ca, cb) && (ca != cb || a > b)) {
        rep.closed = false;
        rep.failures.push_back("cone " + to_string(ca) + " is contained in max cone " +
                               to_string(cb));
      }
    }
  }

  if (rep.primitive && rep.smooth) {
    for (std::size_t a = 0; a < fan.max_cones().size(); ++a) {
      for (std::size_t b = a + 1; b < fan.max_cones().size(); ++b) {
        const Cone& sa = fan.max_cones()[a];
        const Cone& sb = fan.max_cones()[b];
        for (int side = 0; side < 2; ++side) {
          const Cone& s = side == 0 ? sa : sb;
          const Cone& t = side == 0 ? sb : sa;
          bool bad = false;
          for (std::size_t extra : s.rays) {
            if (std::binary_search(t.rays.begin(), t.rays.end(), extra)) continue;
            if (improper_intersection(fan, s, t, extra)) {
              bad = true;
              break;
            }
          }
          if (bad) {
            rep.intersections = false;
            rep.failures.push_back("cones " + to_string(sa.rays) + " and " + to_string(sb.rays) +
                                   " meet outside their common face");
            break;
          }
        }
      }
    }
  }

  rep.valid = rep.primitive && rep.smooth && rep.closed && rep.intersections;
  return rep;
}

void require_valid(const Fan& fan) {
  FanReport rep = validate_fan(fan);
  if (!rep.valid) {
    throw Error(Errc::InvalidFan, rep.failures.empty() ? "invalid fan" : rep.failures.front());
  }
}

std::optional<RatVector> cone_coordinates(const Fan& fan, const Cone& cone,
                                          const IntVector& v) {
  const std::size_t n = fan.dim();
  if (v.size() != n) throw Error(Errc::DimensionMismatch, "vector length differs from fan dim");
  RatMatrix a(n, RatVector(cone.rays.size()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < cone.rays.size(); ++k) a[r][k] = fan.ray(cone.rays[k])[r];
  auto x = solve_linear(a, to_rational(v));
  if (!x) return std::nullopt;
  for (const auto& c : *x)
    if (c < 0) return std::nullopt;
  return x;
}

namespace detail {

std::optional<Cone> minimal_cone_containing_unchecked(const Fan& fan, const IntVector& v) {
  if (is_zero(v)) return Cone{};
  for (const auto& c : fan.max_cones()) {
    auto coords = cone_coordinates(fan, c, v);
    if (!coords) continue;
    IndexSet support;
    for (std::size_t k = 0; k < c.rays.size(); ++k)
      if ((*coords)[k] > 0) support.push_back(c.rays[k]);
    return Cone{support};
  }
  return std::nullopt;
}

bool is_complete_unchecked(const Fan& fan) {
  const std::size_t n = fan.dim();
  if (n == 0) return true;
  if (fan.max_cones().empty()) return false;
  for (const auto& c : fan.max_cones())
    if (c.rays.size() != n) return false;

  std::map<IndexSet, std::vector<std::size_t>> walls;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    const auto& rays = fan.max_cones()[c].rays;
    for (std::size_t drop = 0; drop < rays.size(); ++drop) {
      IndexSet wall;
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (k != drop) wall.push_back(rays[k]);
      walls[wall].push_back(c);
    }
  }
  std::vector<std::size_t> parent(fan.max_cones().size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [wall, cones] : walls) {
    if (cones.size() != 2) return false;
    parent[find(cones[0])] = find(cones[1]);
  }
  for (std::size_t c = 0; c < parent.size(); ++c)
    if (find(c) != find(0)) return false;

  // Cross-check coverage on the rays, their negatives and +-e_k.
  std::vector<IntVector> probes;
  for (const auto& r : fan.rays()) {
    probes.push_back(r);
    IntVector neg = r;
    for (auto& x : neg) x = -x;
    probes.push_back(std::move(neg));
  }
  for (std::size_t k = 0; k < n; ++k) {
    IntVector e(n, Integer(0));
    e[k] = 1;
    probes.push_back(e);
    e[k] = -1;
    probes.push_back(e);
  }
  for (const auto& p : probes)
    if (!minimal_cone_containing_unchecked(fan, p)) return false;
  return true;
}

}  // namespace detail

bool is_complete(const Fan& fan) {
  require_valid(fan);
  return detail::is_complete_unchecked(fan);
}

std::optional<Cone> minimal_cone_containing(const Fan& fan, const IntVector& v) {
  require_valid(fan);
  return detail::minimal_cone_containing_unchecked(fan, v);
}

std::vector<IndexSet> primitive_collections(const Fan& fan) {
  require_valid(fan);
  const std::size_t nr = fan.num_rays();
  if (nr > 63) throw Error(Errc::InvalidFan, "more than 63 rays are not supported");

  std::unordered_set<std::uint64_t> faces;
  std::size_t max_size = 0;
  for (const auto& c : fan.max_cones()) {
    const std::size_t k = c.rays.size();
    max_size = std::max(max_size, k);
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
      std::uint64_t mask = 0;
      for (std::size_t b = 0; b < k; ++b)
        if (sub & (std::uint64_t{1} << b)) mask |= std::uint64_t{1} << c.rays[b];
      faces.insert(mask);
    }
  }
  faces.insert(0);

  std::vector<IndexSet> out;
  for (std::uint64_t face : faces) {
    // Extend each face by a ray above its largest index; a non-face whose
    // every facet is a face is a primitive collection.
    std::size_t start = 0;
    for (std::size_t b = 0; b < nr; ++b)
      if (face & (std::uint64_t{1} << b)) start = b + 1;
    for (std::size_t j = start; j < nr; ++j) {
      std::uint64_t cand = face | (std::uint64_t{1} << j);
      if (faces.count(cand)) continue;
      bool minimal = true;
      for (std::size_t b = 0; b < nr && minimal; ++b) {
        std::uint64_t bit = std::uint64_t{1} << b;
        if ((cand & bit) && !faces.count(cand & ~bit)) minimal = false;
      }
      if (!minimal) continue;
      IndexSet p;
      for (std::size_t b = 0; b < nr; ++b)
        if (cand & (std::uint64_t{1} << b)) p.push_back(b);
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer minimal_chern(const Fan& fan) {
  require_valid(fan);
  if (!detail::is_complete_unchecked(fan)) throw Error(Errc::NotComplete, "fan does not cover R^n");
  Integer g = 0;
  for (const auto& lambda : kernel_basis(fan.ray_matrix())) {
    Integer s = 0;
    for (const auto& x : lambda) s += x;
    s = abs(s);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
  }
  if (g == 0) throw Error(Errc::DegenerateChern, "c1 pairs to zero with every curve class");
  return g;
}

bool is_fano(const Fan& fan) {
  require_valid(fan);
  if (!detail::is_complete_unchecked(fan)) throw Error(Errc::NotComplete, "fan does not cover R^n");
  Polytope dual{fan.dim(), fan.rays(), RatVector(fan.num_rays(), Rational(1))};
  std::vector<Vertex> verts = vertices(dual);
  std::set<IndexSet> vertex_cones;
  for (const auto& v : verts) {
    if (v.active_facets.size() != fan.dim()) return false;
    for (const auto& c : v.point)
      if (c.get_den() != 1) return false;
    vertex_cones.insert(v.active_facets);
  }
  std::set<IndexSet> fan_cones;
  for (const auto& c : fan.max_cones()) fan_cones.insert(c.rays);
  return vertex_cones == fan_cones;
}

}  // namespace toric
