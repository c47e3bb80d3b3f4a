#include "toric/gf2_poly.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace toric::gf2 {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents quotient(const Exponents& b, const Exponents& a) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

PolyRing::PolyRing(std::vector<std::uint32_t> weights) : weights_(std::move(weights)) {
  for (auto w : weights_)
    if (w == 0) throw std::invalid_argument("variable weights must be positive");
}

std::uint64_t PolyRing::degree(const Exponents& m) const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += std::uint64_t{weights_[i]} * m[i];
  return d;
}

int PolyRing::compare(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = degree(a), db = degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

void PolyRing::sort_and_cancel(std::vector<Exponents>& terms) const {
  std::sort(terms.begin(), terms.end(),
            [this](const Exponents& a, const Exponents& b) { return compare(a, b) > 0; });
  std::vector<Exponents> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(terms[i]));
    i = j;
  }
  terms = std::move(out);
}

Polynomial PolyRing::one() const { return monomial(Exponents(num_vars(), 0)); }

Polynomial PolyRing::variable(std::size_t i) const {
  Exponents e(num_vars(), 0);
  e.at(i) = 1;
  return monomial(std::move(e));
}

Polynomial PolyRing::monomial(Exponents m) const {
  if (m.size() != num_vars()) throw std::invalid_argument("monomial has wrong number of variables");
  Polynomial p;
  p.terms_.push_back(std::move(m));
  return p;
}

Polynomial PolyRing::from_terms(std::vector<Exponents> terms) const {
  for (const auto& t : terms)
    if (t.size() != num_vars()) throw std::invalid_argument("monomial has wrong number of variables");
  Polynomial p;
  sort_and_cancel(terms);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = compare(a.terms_[i], b.terms_[j]);
    if (c > 0) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  while (i < a.terms_.size()) out.terms_.push_back(a.terms_[i++]);
  while (j < b.terms_.size()) out.terms_.push_back(b.terms_[j++]);
  return out;
}

Polynomial PolyRing::mul_monomial(const Polynomial& a, const Exponents& m) const {
  Polynomial out;
  out.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) {
    Exponents e = t;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += m[i];
    out.terms_.push_back(std::move(e));
  }
  return out;  // monomial multiplication preserves the order
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  std::vector<Exponents> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Exponents e = s;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += t[i];
      terms.push_back(std::move(e));
    }
  }
  Polynomial out;
  sort_and_cancel(terms);
  out.terms_ = std::move(terms);
  return out;
}

Polynomial PolyRing::pow(const Polynomial& a, std::uint32_t k) const {
  Polynomial result = one();
  for (std::uint32_t i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

Polynomial PolyRing::substitute(const Polynomial& f, const std::vector<Polynomial>& images) const {
  Polynomial out;
  for (const auto& t : f.terms_) {
    Polynomial term = one();
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i]) term = mul(term, pow(images.at(i), t[i]));
    out = add(out, term);
  }
  return out;
}

bool PolyRing::is_homogeneous(const Polynomial& f) const {
  for (const auto& t : f.terms_)
    if (degree(t) != degree(f.terms_.front())) return false;
  return true;
}

Polynomial PolyRing::normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) const {
  Polynomial rem;
  Polynomial work = f;
  while (!work.is_zero()) {
    const Exponents lt = work.leading();
    const Polynomial* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading(), lt)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      work = add(work, mul_monomial(*reducer, quotient(lt, reducer->leading())));
    } else {
      rem.terms_.push_back(lt);
      work.terms_.erase(work.terms_.begin());
    }
  }
  return rem;
}

std::vector<Polynomial> PolyRing::groebner_basis(std::vector<Polynomial> generators,
                                                 std::size_t max_steps) const {
  std::vector<Polynomial> g;
  for (auto& p : generators)
    if (!p.is_zero()) g.push_back(std::move(p));

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  std::size_t steps = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Exponents& li = g[i].leading();
    const Exponents& lj = g[j].leading();
    Exponents l = lcm(li, lj);
    // Coprime leading monomials: the S-polynomial reduces to zero.
    bool coprime = true;
    for (std::size_t k = 0; k < l.size(); ++k)
      if (li[k] && lj[k]) coprime = false;
    if (coprime) continue;
    if (max_steps && ++steps > max_steps) {
      throw std::runtime_error("Groebner basis computation exceeded the step bound");
    }
    Polynomial s = add(mul_monomial(g[i], quotient(l, li)), mul_monomial(g[j], quotient(l, lj)));
    Polynomial r = normal_form(s, g);
    if (r.is_zero()) continue;
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(g[j].leading(), g[i].leading()) &&
          (g[j].leading() != g[i].leading() || j < i)) {
        redundant = true;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial tail;
    tail.terms_.assign(minimal[i].terms_.begin() + 1, minimal[i].terms_.end());
    Polynomial p = add(monomial(minimal[i].leading()), normal_form(tail, others));
    reduced.push_back(std::move(p));
  }
  std::sort(reduced.begin(), reduced.end(), [this](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading(), b.leading()) > 0;
  });
  return reduced;
}

std::vector<Exponents> PolyRing::standard_monomials(const std::vector<Polynomial>& basis,
                                                    std::uint64_t degree) const {
  std::vector<Exponents> out;
  Exponents e(num_vars(), 0);
  // Depth-first enumeration of exponent vectors of the requested weight.
  auto rec = [&](auto&& self, std::size_t var, std::uint64_t remaining) -> void {
    if (var == num_vars()) {
      if (remaining != 0) return;
      for (const auto& g : basis)
        if (divides(g.leading(), e)) return;
      out.push_back(e);
      return;
    }
    for (std::uint64_t k = 0; k * weights_[var] <= remaining; ++k) {
      e[var] = static_cast<std::uint32_t>(k);
      self(self, var + 1, remaining - k * weights_[var]);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [this](const Exponents& a, const Exponents& b) { return compare(a, b) > 0; });
  return out;
}

}  // namespace toric::gf2
