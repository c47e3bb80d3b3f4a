#pragma once

// The geometries shipped with the tool: CP^n, CP^1 x CP^1 and the one point
// blow-up of CP^2.

#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct Builtin {
  std::string id;
  Fan fan;
  Polytope polytope;
  std::string unit_name;  // "[CP^2]" etc. in product tables
  std::string real_name;  // "[RP^2]" etc.
};

/// Accepts "cp:n" (1 <= n <= kMaxProjectiveDim), "cp1xcp1", "blowup-cp2".
/// Throws ParseError for anything else.
Builtin builtin(const std::string& id);

inline constexpr std::size_t kMaxProjectiveDim = 8;

/// One representative id per family, in a fixed order.
std::vector<std::string> builtin_ids();

}  // namespace toric
