#include "toric/morse.hpp"

#include "toric/error.hpp"

namespace toric {

namespace {

void require_delzant(const Polytope& p) {
  DelzantReport rep = delzant_check(p);
  if (!rep.delzant) throw Error(Errc::NotDelzant, rep.certificates.front());
}

}  // namespace

std::vector<IntVector> edge_directions(const Polytope& p, const Vertex& vertex) {
  if (vertex.active_facets.size() != p.dim) {
    throw Error(Errc::NotDelzant, "vertex " + to_string(vertex.point) + " is not simple");
  }
  std::vector<IntVector> active;
  for (std::size_t i : vertex.active_facets) active.push_back(p.normals.at(i));
  try {
    return dual_basis(active).dual;
  } catch (const Error& e) {
    throw Error(Errc::NotDelzant, "vertex " + to_string(vertex.point) + ": " + e.detail());
  }
}

MorseProfile morse_profile(const Polytope& p, const IntVector& xi) {
  if (xi.size() != p.dim) {
    throw Error(Errc::DimensionMismatch, "xi has length " + std::to_string(xi.size()) +
                                             " in dimension " + std::to_string(p.dim));
  }
  require_delzant(p);
  MorseProfile prof;
  prof.xi = xi;
  prof.betti_R.assign(p.dim + 1, 0);
  prof.betti_X.assign(2 * p.dim + 1, 0);
  for (auto& v : vertices(p)) {
    MorseDatum d;
    d.edge_directions = edge_directions(p, v);
    for (const auto& e : d.edge_directions) {
      Integer s = dot(e, xi);
      if (s == 0) {
        throw Error(Errc::NonGenericXi, "edge direction " + to_string(e) + " at vertex " +
                                            to_string(v.point) + " is orthogonal to xi = " +
                                            to_string(xi));
      }
      if (s < 0) ++d.index_R;
    }
    d.index_X = 2 * d.index_R;
    ++prof.betti_R[d.index_R];
    ++prof.betti_X[d.index_X];
    d.vertex = std::move(v);
    prof.data.push_back(std::move(d));
  }
  return prof;
}

IntVector suggest_generic_xi(const Polytope& p) {
  require_delzant(p);
  std::vector<IntVector> dirs;
  for (const auto& v : vertices(p))
    for (auto& d : edge_directions(p, v)) dirs.push_back(std::move(d));
  for (long m = 2;; ++m) {
    IntVector xi(p.dim);
    Integer power = 1;
    for (auto& x : xi) {
      x = power;
      power *= m;
    }
    bool generic = true;
    for (const auto& d : dirs)
      if (dot(d, xi) == 0) generic = false;
    if (generic) return xi;
  }
}

HomologyComparison compare_with_homology(const MorseProfile& profile, const HomologyRing& ring) {
  if (profile.betti_R.size() != ring.dim() + 1) {
    throw Error(Errc::MismatchedInput, "profile of dimension " +
                                           std::to_string(profile.betti_R.size() - 1) +
                                           " against a ring of dimension " +
                                           std::to_string(ring.dim()));
  }
  HomologyComparison rep;
  const std::size_t n = ring.dim();
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    total += profile.betti_R[k];
    // H_{2k}(X) sits in codegree 2n - 2k.
    std::size_t rank = ring.rank(2 * (n - k));
    if (profile.betti_R[k] != rank) {
      rep.ok = false;
      rep.mismatches.push_back("b_" + std::to_string(k) + "(R) = " +
                               std::to_string(profile.betti_R[k]) + " but rank H_" +
                               std::to_string(2 * k) + "(X) = " + std::to_string(rank));
    }
    if (profile.betti_X[2 * k] != rank) {
      rep.ok = false;
      rep.mismatches.push_back("Morse count in index " + std::to_string(2 * k) + " on X is " +
                               std::to_string(profile.betti_X[2 * k]) + " but rank is " +
                               std::to_string(rank));
    }
  }
  if (total != ring.total_rank()) {
    rep.ok = false;
    rep.mismatches.push_back("sum of b_k(R) = " + std::to_string(total) + " but total rank = " +
                             std::to_string(ring.total_rank()));
  }
  return rep;
}

std::size_t displacement_bound(const Polytope& p) {
  require_delzant(p);
  return vertices(p).size();
}

}  // namespace toric
