#include "toric/fourier_motzkin.hpp"

#include <algorithm>
#include <set>

#include "toric/error.hpp"

namespace toric::fm {

namespace {

struct Ineq {
  RatVector a;  // a . x >= b
  Rational b;
  bool operator<(const Ineq& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

// Scale so the first nonzero coefficient has absolute value 1; makes
// duplicate detection effective.
Ineq normalize(Ineq q) {
  for (const auto& c : q.a) {
    if (c != 0) {
      Rational s = abs(c);
      for (auto& x : q.a) x /= s;
      q.b /= s;
      break;
    }
  }
  return q;
}

bool trivially_false(const Ineq& q) {
  return std::all_of(q.a.begin(), q.a.end(), [](const Rational& c) { return c == 0; }) &&
         q.b > 0;
}

bool is_constant(const Ineq& q) {
  return std::all_of(q.a.begin(), q.a.end(), [](const Rational& c) { return c == 0; });
}

}  // namespace

bool feasible(std::vector<Constraint> system, std::size_t num_vars) {
  for (const auto& c : system) {
    if (c.coeffs.size() != num_vars) {
      throw Error(Errc::DimensionMismatch, "constraint length does not match variable count");
    }
  }

  // Substitute equalities: pick a pivot variable, express it through the rest.
  std::vector<Ineq> ineqs;
  std::vector<Constraint> eqs;
  for (auto& c : system) {
    if (c.relation == Relation::Equal) {
      eqs.push_back(std::move(c));
    } else {
      ineqs.push_back({std::move(c.coeffs), std::move(c.rhs)});
    }
  }
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Constraint& eq = eqs[e];
    std::size_t pivot = num_vars;
    for (std::size_t j = 0; j < num_vars; ++j) {
      if (eq.coeffs[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot == num_vars) {
      if (eq.rhs != 0) return false;
      continue;
    }
    Rational p = eq.coeffs[pivot];
    auto eliminate = [&](RatVector& a, Rational& b) {
      if (a[pivot] == 0) return;
      Rational f = a[pivot] / p;
      for (std::size_t j = 0; j < num_vars; ++j) a[j] -= f * eq.coeffs[j];
      b -= f * eq.rhs;
    };
    for (std::size_t e2 = e + 1; e2 < eqs.size(); ++e2) eliminate(eqs[e2].coeffs, eqs[e2].rhs);
    for (auto& q : ineqs) eliminate(q.a, q.b);
  }

  std::set<Ineq> current;
  for (auto& q : ineqs) {
    if (trivially_false(q)) return false;
    if (is_constant(q)) continue;
    current.insert(normalize(std::move(q)));
  }

  for (std::size_t var = 0; var < num_vars; ++var) {
    std::vector<Ineq> lower, upper;  // coefficient > 0 gives a lower bound on x_var
    std::set<Ineq> next;
    for (const auto& q : current) {
      if (q.a[var] > 0) {
        lower.push_back(q);
      } else if (q.a[var] < 0) {
        upper.push_back(q);
      } else {
        next.insert(q);
      }
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        Rational fl = -up.a[var];
        Rational fu = lo.a[var];
        Ineq comb{RatVector(num_vars, Rational(0)), fl * lo.b + fu * up.b};
        for (std::size_t j = 0; j < num_vars; ++j) comb.a[j] = fl * lo.a[j] + fu * up.a[j];
        comb.a[var] = 0;
        if (trivially_false(comb)) return false;
        if (is_constant(comb)) continue;
        next.insert(normalize(std::move(comb)));
      }
    }
    current = std::move(next);
  }
  return true;
}

}  // namespace toric::fm
