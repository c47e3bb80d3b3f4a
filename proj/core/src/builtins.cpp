#include "toric/builtins.hpp"

#include <charconv>

#include "toric/error.hpp"

namespace toric {

namespace {

Builtin projective(std::size_t n) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.emplace_back(n, Integer(-1));
  std::vector<IndexSet> cones;
  for (std::size_t skip = n + 1; skip-- > 0;) {
    IndexSet c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(std::move(c));
  }
  // Standard simplex {x_i >= 0, sum x_i <= 1}.
  RatVector offsets(n + 1, Rational(0));
  offsets[n] = 1;
  Builtin b;
  b.id = "cp:" + std::to_string(n);
  b.fan = Fan(n, rays, std::move(cones));
  b.polytope = Polytope{n, std::move(rays), std::move(offsets)};
  b.unit_name = "[CP^" + std::to_string(n) + "]";
  b.real_name = "[RP^" + std::to_string(n) + "]";
  return b;
}

Builtin quadric() {
  std::vector<IntVector> rays = {make_int_vector({1, 0}), make_int_vector({-1, 0}),
                                 make_int_vector({0, 1}), make_int_vector({0, -1})};
  Builtin b;
  b.id = "cp1xcp1";
  b.fan = Fan(2, rays, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  b.polytope = Polytope{2, std::move(rays), RatVector(4, Rational(1))};
  b.unit_name = "[X]";
  b.real_name = "[R]";
  return b;
}

Builtin blowup() {
  // v1 + v3 = v4 and v2 + v4 = 0; D4 is the exceptional curve.
  std::vector<IntVector> rays = {make_int_vector({1, 0}), make_int_vector({0, 1}),
                                 make_int_vector({-1, -1}), make_int_vector({0, -1})};
  Builtin b;
  b.id = "blowup-cp2";
  b.fan = Fan(2, rays, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  b.polytope = Polytope{2, std::move(rays), RatVector(4, Rational(1))};
  b.unit_name = "[X]";
  b.real_name = "[R]";
  return b;
}

}  // namespace

Builtin builtin(const std::string& id) {
  if (id == "cp1xcp1") return quadric();
  if (id == "blowup-cp2") return blowup();
  if (id.rfind("cp:", 0) == 0) {
    std::size_t n = 0;
    const char* first = id.data() + 3;
    const char* last = id.data() + id.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && n >= 1 && n <= kMaxProjectiveDim) return projective(n);
    throw Error(Errc::ParseError, "builtin: '" + id + "' needs 1 <= n <= " +
                                      std::to_string(kMaxProjectiveDim));
  }
  throw Error(Errc::ParseError, "builtin: unknown id '" + id + "' (cp:n, cp1xcp1, blowup-cp2)");
}

std::vector<std::string> builtin_ids() {
  return {"cp:1", "cp:2", "cp:3", "cp1xcp1", "blowup-cp2"};
}

}  // namespace toric
