#pragma once

// Morse theory of f_xi = <mu, xi> on a toric manifold and its real part.
// Critical points sit over the vertices; the index on R counts edges whose
// inward generator pairs negatively with xi, and the index on X is twice that.

#include <string>
#include <vector>

#include "toric/homology.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct MorseDatum {
  Vertex vertex;
  std::vector<IntVector> edge_directions;  // dual to the active normals, inward
  std::size_t index_R = 0;
  std::size_t index_X = 0;
};

struct MorseProfile {
  std::vector<MorseDatum> data;
  IntVector xi;
  std::vector<std::size_t> betti_R;  // b_0 .. b_n
  std::vector<std::size_t> betti_X;  // b_0 .. b_2n
};

/// Throws NotDelzant if the vertex is not simple or its normals are not a basis.
std::vector<IntVector> edge_directions(const Polytope& p, const Vertex& vertex);

/// Throws NonGenericXi naming the first vertex/edge with <d, xi> = 0.
MorseProfile morse_profile(const Polytope& p, const IntVector& xi);

/// First vector of the form (1, M, M^2, ...) that is generic for p.
IntVector suggest_generic_xi(const Polytope& p);

struct HomologyComparison {
  bool ok = true;
  std::vector<std::string> mismatches;
};

/// b_k(R) against the rank of H_{2k}(X). Throws MismatchedInput on a
/// dimension mismatch.
HomologyComparison compare_with_homology(const MorseProfile& profile, const HomologyRing& ring);

/// Number of vertices, which equals the total Z2 Betti number of R.
std::size_t displacement_bound(const Polytope& p);

}  // namespace toric
