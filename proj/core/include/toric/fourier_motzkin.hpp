#pragma once

// Exact feasibility of small systems of linear constraints over Q by
// Fourier-Motzkin elimination. Equalities are substituted out first.

#include <vector>

#include "toric/lattice.hpp"

namespace toric::fm {

enum class Relation { GreaterEqual, Equal };

/// coeffs . x  (>= | =)  rhs
struct Constraint {
  RatVector coeffs;
  Relation relation = Relation::GreaterEqual;
  Rational rhs = 0;
};

/// True iff some x in Q^num_vars satisfies every constraint.
bool feasible(std::vector<Constraint> system, std::size_t num_vars);

}  // namespace toric::fm
