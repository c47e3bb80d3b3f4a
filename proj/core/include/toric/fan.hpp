#pragma once

// Simplicial fans of rational cones in R^n, given by primitive ray
// generators and maximal cones (sets of ray indices).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Sorted, duplicate-free set of indices into a fan's ray list.
using IndexSet = std::vector<std::size_t>;

IndexSet make_index_set(std::vector<std::size_t> indices);
std::string to_string(const IndexSet& s, bool one_based = false);
bool is_subset(const IndexSet& sub, const IndexSet& super);

struct Cone {
  IndexSet rays;
  bool operator==(const Cone&) const = default;
  auto operator<=>(const Cone&) const = default;
};

class Fan {
 public:
  Fan() = default;
  /// Throws InvalidFan if a cone references a missing ray or a ray has the
  /// wrong length. Cone indices are sorted on construction.
  Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<IndexSet> max_cones);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_rays() const noexcept { return rays_.size(); }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const IntVector& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<Cone>& max_cones() const noexcept { return max_cones_; }
  IntMatrix ray_matrix() const;

  /// Face closure of the max cones (empty cone included), sorted.
  std::vector<Cone> all_cones() const;
  /// Cones of dimension r.
  std::vector<Cone> cones_of_dim(std::size_t r) const;
  /// True iff the ray set spans a cone of the fan (is a face of a max cone).
  bool is_cone(const IndexSet& rays) const;
  /// First max cone containing the given face, if any.
  std::optional<Cone> max_cone_containing(const IndexSet& face) const;

  bool operator==(const Fan&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> max_cones_;
};

struct FanReport {
  bool primitive = true;
  bool smooth = true;
  bool closed = true;        // face closure / maximality
  bool intersections = true; // pairwise intersections are common faces
  bool valid = true;
  std::vector<std::string> failures;
};

FanReport validate_fan(const Fan& fan);

/// Throws InvalidFan unless validate_fan passes.
void require_valid(const Fan& fan);

/// Covering test for valid fans. Throws InvalidFan.
bool is_complete(const Fan& fan);

/// Unique minimal cone whose nonnegative span contains v; nullopt iff v lies
/// outside the support. Throws InvalidFan.
std::optional<Cone> minimal_cone_containing(const Fan& fan, const IntVector& v);

/// Nonnegative coordinates of v in the rays of the given simplicial cone, or
/// nullopt when v is not in the cone.
std::optional<RatVector> cone_coordinates(const Fan& fan, const Cone& cone, const IntVector& v);

/// Inclusion-minimal ray sets that do not span a cone, sorted.
std::vector<IndexSet> primitive_collections(const Fan& fan);

/// gcd over a kernel basis of |sum_j lambda_j|. Requires a complete valid fan.
Integer minimal_chern(const Fan& fan);

/// True iff {phi : <phi, v_i> >= -1} is a lattice polytope with normal fan
/// equal to the input fan.
bool is_fano(const Fan& fan);

namespace detail {
// Variants that skip revalidation, for callers that already checked the fan.
std::optional<Cone> minimal_cone_containing_unchecked(const Fan& fan, const IntVector& v);
bool is_complete_unchecked(const Fan& fan);
}  // namespace detail

}  // namespace toric
