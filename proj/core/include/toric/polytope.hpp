#pragma once

// Polytopes {phi : <phi, v_i> >= -a_i} in (Q^n)*, their vertices, normal
// fans, lattice points and the projective embedding exponents.

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

using Complex = std::complex<double>;

struct Polytope {
  std::size_t dim = 0;
  std::vector<IntVector> normals;  // v_i, primitive
  RatVector offsets;               // a_i

  std::size_t num_facets() const noexcept { return normals.size(); }
  bool operator==(const Polytope&) const = default;
};

/// Throws ValidationError on ragged input or non-primitive normals.
void check_well_formed(const Polytope& p);

struct Vertex {
  RatVector point;
  IndexSet active_facets;  // facets with <point, v_i> = -a_i
  bool is_integral() const;
  IntVector integral_point() const;  // throws NotLattice
  bool operator==(const Vertex&) const = default;
};

/// Exact test that the normals positively span R^n.
bool is_bounded(const Polytope& p);

/// All vertices, sorted by coordinates. Throws Unbounded or EmptyPolytope.
std::vector<Vertex> vertices(const Polytope& p);

/// Rays are the facet normals (in facet order); max cones are the vertex
/// active sets. Throws Unbounded, NotFullDimensional or NotSimple.
Fan normal_fan(const Polytope& p);

struct DelzantReport {
  bool lattice = true;
  bool delzant = true;
  std::vector<std::string> certificates;
};

DelzantReport delzant_check(const Polytope& p);

struct EmbeddingData {
  std::size_t dim = 0;
  std::vector<IntVector> lattice_points;  // m_1..m_L
  std::vector<IntVector> exponents;       // exponents[i][j] = LD(m_i, F_j)
};

/// Throws Unbounded or NotLattice.
EmbeddingData lattice_points(const Polytope& p);

/// Monomials prod_j z_j^{LD(m_i, F_j)} with 0^0 = 1.
std::vector<Complex> embed(const EmbeddingData& e, std::span<const Complex> toric_coords);

/// sum m_i |z_i|^2 / sum |z_i|^2. Throws ZeroVector.
std::vector<double> moment_map(const EmbeddingData& e, std::span<const Complex> homogeneous);

/// z_i = 0 on the vertex's active facets and 1 elsewhere.
std::vector<Complex> fixed_point_coordinates(const Polytope& p, const Vertex& vertex);

/// Vertex round-trip tolerance used by the moment-map checks.
inline constexpr double kMomentTolerance = 1e-9;

}  // namespace toric
