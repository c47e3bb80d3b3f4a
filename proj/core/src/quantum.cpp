#include "toric/quantum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "toric/error.hpp"
#include "toric/morse.hpp"

namespace toric {

LaurentRing LaurentRing::real(long n_r) {
  if (n_r == 0) throw Error(Errc::ValidationError, "Laurent variable of degree 0");
  return LaurentRing{'t', -n_r};
}

LaurentRing LaurentRing::ambient(long c_x) {
  if (c_x == 0) throw Error(Errc::ValidationError, "Laurent variable of degree 0");
  return LaurentRing{'q', -2 * c_x};
}

std::string LaurentRing::power_label(long k) const {
  if (k == 0) return "1";
  std::string v(1, variable);
  return k == 1 ? v : v + "^" + std::to_string(k);
}

std::vector<QuantumRelation> quantum_relations(const Fan& fan) {
  require_valid(fan);
  if (!detail::is_complete_unchecked(fan)) throw Error(Errc::NotComplete, "fan does not cover R^n");
  if (!is_fano(fan)) throw Error(Errc::NotFano, "the polytope dual to the fan is not reflexive");
  const long cx = minimal_chern(fan).get_si();

  std::vector<QuantumRelation> out;
  for (const auto& p : primitive_collections(fan)) {
    IntVector sum(fan.dim(), Integer(0));
    for (std::size_t i : p)
      for (std::size_t k = 0; k < fan.dim(); ++k) sum[k] += fan.ray(i)[k];
    QuantumRelation rel;
    rel.collection = p;
    rel.rhs_exponents.assign(fan.num_rays(), 0);
    long csum = 0;
    if (!is_zero(sum)) {
      auto cone = detail::minimal_cone_containing_unchecked(fan, sum);
      auto coords = cone ? cone_coordinates(fan, *cone, sum) : std::nullopt;
      if (!coords) throw Error(Errc::NotComplete, to_string(sum) + " lies in no cone");
      for (std::size_t k = 0; k < cone->rays.size(); ++k) {
        const Rational& c = (*coords)[k];
        if (c.get_den() != 1) {
          throw Error(Errc::InvalidFan, "non-integral cone coordinates for " + to_string(sum));
        }
        if (std::binary_search(p.begin(), p.end(), cone->rays[k])) {
          throw Error(Errc::InvalidFan, "cone of " + to_string(sum) + " meets the collection " +
                                            to_string(p, true));
        }
        rel.rhs_exponents[cone->rays[k]] = static_cast<std::uint32_t>(c.get_num().get_ui());
        csum += c.get_num().get_si();
      }
    }
    long excess = static_cast<long>(p.size()) - csum;
    if (excess % cx != 0 || excess <= 0) {
      throw Error(Errc::DegreeNotDivisible, "collection " + to_string(p, true) + ": |P| - sum c = " +
                                                std::to_string(excess) + " is not a positive multiple of " +
                                                std::to_string(cx));
    }
    rel.q_power = static_cast<std::uint32_t>(excess / cx);
    // 2|P| = 2 sum c + 2 C_X d_P holds by construction; kept as a guard.
    if (2 * static_cast<long>(p.size()) != 2 * csum + 2 * cx * static_cast<long>(rel.q_power)) {
      throw std::logic_error("inhomogeneous quantum relation");
    }
    out.push_back(std::move(rel));
  }
  return out;
}

QuantumRing::QuantumRing(const Fan& fan) : classical_(fan) {
  relations_ = quantum_relations(fan);
  chern_ = minimal_chern(fan).get_si();

  const auto& free = classical_.free_rays();
  const std::size_t nf = free.size();
  std::vector<std::uint32_t> weights(nf, 1);
  weights.push_back(static_cast<std::uint32_t>(chern_));
  ring_ = gf2::PolyRing(std::move(weights));

  // Lift the classical divisor images into the ring with q.
  for (std::size_t i = 0; i < fan.num_rays(); ++i) {
    std::vector<gf2::Exponents> terms;
    for (auto e : classical_.divisor_polynomial(i).terms()) {
      e.push_back(0);
      terms.push_back(std::move(e));
    }
    divisor_images_.push_back(ring_.from_terms(std::move(terms)));
  }

  std::vector<gf2::Polynomial> gens;
  for (const auto& rel : relations_) {
    gf2::Polynomial lhs = ring_.one();
    for (std::size_t i : rel.collection) lhs = ring_.mul(lhs, divisor_images_[i]);
    gf2::Polynomial rhs = ring_.pow(ring_.variable(nf), rel.q_power);
    for (std::size_t j = 0; j < rel.rhs_exponents.size(); ++j)
      if (rel.rhs_exponents[j]) rhs = ring_.mul(rhs, ring_.pow(divisor_images_[j], rel.rhs_exponents[j]));
    gens.push_back(ring_.add(lhs, rhs));
  }
  groebner_ = ring_.groebner_basis(std::move(gens));
}

QHClass QuantumRing::basis_class(std::size_t codegree, std::size_t index, long power) const {
  if (index >= classical_.basis(codegree).size()) {
    throw Error(Errc::UnknownClass, "no basis class " + std::to_string(index) + " in codegree " +
                                        std::to_string(codegree));
  }
  return QHClass{static_cast<long>(codegree) + 2 * chern_ * power, {{codegree, index, power}}};
}

QHClass QuantumRing::unit() const { return basis_class(0, 0); }

QHClass QuantumRing::from_classical(const HomologyClass& c, long power) const {
  QHClass out{static_cast<long>(c.codegree) + 2 * chern_ * power, {}};
  for (std::size_t k = 0; k < c.coords.size(); ++k)
    if (c.coords[k]) out.terms.push_back({c.codegree, k, power});
  return out;
}

QHClass QuantumRing::divisor(std::size_t i) const { return from_classical(classical_.divisor(i)); }

HomologyClass QuantumRing::classical_part(const QHClass& c) const {
  if (c.degree < 0) return HomologyClass{0, {}};
  HomologyClass out = classical_.zero(static_cast<std::size_t>(c.degree));
  for (const auto& t : c.terms)
    if (t.power == 0) out.coords.at(t.index) ^= 1;
  return out;
}

void QuantumRing::check_homogeneous(const QHClass& c) const {
  for (const auto& t : c.terms) {
    long d = static_cast<long>(t.codegree) + 2 * chern_ * t.power;
    if (d != c.degree) {
      throw Error(Errc::InhomogeneousClass, "term of degree " + std::to_string(d) +
                                                " in a class of degree " + std::to_string(c.degree));
    }
  }
}

QHClass QuantumRing::from_polynomial(const gf2::Polynomial& f, long shift, long degree) const {
  gf2::Polynomial nf = ring_.normal_form(f, groebner_);
  const std::size_t nf_vars = classical_.free_rays().size();
  std::map<QHTerm, int> acc;
  for (const auto& t : nf.terms()) {
    gf2::Exponents x(t.begin(), t.begin() + static_cast<long>(nf_vars));
    std::size_t codeg = 0;
    for (auto e : x) codeg += 2 * e;
    const auto& b = classical_.basis(codeg);
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) throw std::logic_error("quantum normal form left the classical basis");
    acc[{codeg, static_cast<std::size_t>(it - b.begin()), shift + static_cast<long>(t.back())}] ^= 1;
  }
  QHClass out{degree, {}};
  for (const auto& [term, parity] : acc)
    if (parity) out.terms.push_back(term);
  return out;
}

QHClass QuantumRing::product(const QHClass& a, const QHClass& b) const {
  check_homogeneous(a);
  check_homogeneous(b);
  std::map<QHTerm, int> acc;
  for (const auto& s : a.terms) {
    for (const auto& t : b.terms) {
      gf2::Exponents ms = classical_.basis(s.codegree).at(s.index);
      gf2::Exponents mt = classical_.basis(t.codegree).at(t.index);
      gf2::Exponents m(ms.size() + 1, 0);
      for (std::size_t k = 0; k < ms.size(); ++k) m[k] = ms[k] + mt[k];
      QHClass part = from_polynomial(ring_.monomial(m), s.power + t.power, a.degree + b.degree);
      for (const auto& u : part.terms) acc[u] ^= 1;
    }
  }
  QHClass out{a.degree + b.degree, {}};
  for (const auto& [term, parity] : acc)
    if (parity) out.terms.push_back(term);
  return out;
}

std::string QuantumRing::basis_label(std::size_t codegree, std::size_t index,
                                     const std::string& unit_name,
                                     const std::string& point_name) const {
  if (codegree == 0) return unit_name;
  if (codegree == 2 * classical_.dim()) return point_name;
  return classical_.monomial_label(classical_.basis(codegree).at(index));
}

std::string QuantumRing::label(const QHClass& c, const std::string& unit_name,
                               const std::string& point_name) const {
  if (c.terms.empty()) return "0";
  LaurentRing lr = coefficients();
  std::string out;
  // Highest classical degree first, as the tables are usually written.
  std::vector<QHTerm> terms = c.terms;
  std::sort(terms.begin(), terms.end(), [](const QHTerm& x, const QHTerm& y) {
    return x.codegree != y.codegree ? x.codegree > y.codegree : x.index < y.index;
  });
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += basis_label(t.codegree, t.index, unit_name, point_name);
    if (t.power != 0) out += "·" + lr.power_label(t.power);
  }
  return out;
}

std::string RealQuantumTable::label(const std::vector<std::pair<std::size_t, long>>& value) const {
  if (value.empty()) return "0";
  std::string out;
  for (const auto& [idx, power] : value) {
    if (!out.empty()) out += " + ";
    out += basis.at(idx).label;
    if (power != 0) out += "·" + coefficients.power_label(power);
  }
  return out;
}

RealQuantumTable qh_real(const Fan& fan, const std::string& unit_name) {
  QuantumRing ring(fan);
  if (ring.chern() < 2) {
    throw Error(Errc::ChernTooSmall, "C_X = " + std::to_string(ring.chern()) +
                                         " < 2; the real quantum isomorphism needs C_X >= 2");
  }
  RealQuantumTable table;
  table.minimal_maslov = ring.chern();
  table.coefficients = LaurentRing::real(ring.chern());
  const HomologyRing& h = ring.classical();
  const std::size_t n = h.dim();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> position;
  // Ordered by increasing degree in R, i.e. decreasing codegree in X.
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t codeg = 2 * (n - k);
    for (std::size_t i = 0; i < h.basis(codeg).size(); ++i) {
      std::string lab;
      if (codeg == 0) {
        lab = unit_name;
      } else if (codeg == 2 * n) {
        lab = "[pt]";
      } else {
        lab = h.monomial_label(h.basis(codeg)[i]) + "_R";
      }
      position[{codeg, i}] = table.basis.size();
      table.basis.push_back({k, codeg, i, lab});
    }
  }
  for (std::size_t l = 0; l < table.basis.size(); ++l) {
    for (std::size_t r = l; r < table.basis.size(); ++r) {
      const auto& a = table.basis[l];
      const auto& b = table.basis[r];
      QHClass prod = ring.product(ring.basis_class(a.codegree, a.index),
                                  ring.basis_class(b.codegree, b.index));
      RealProduct p{l, r, {}};
      for (const auto& t : prod.terms) p.result.emplace_back(position.at({t.codegree, t.index}), t.power);
      std::sort(p.result.begin(), p.result.end());
      table.products.push_back(std::move(p));
    }
  }
  return table;
}

WidenessSummary wideness_summary(const Fan& fan, const Polytope& p, const IntVector& xi) {
  const long cx = minimal_chern(fan).get_si();
  if (cx < 2) {
    throw Error(Errc::ChernTooSmall, "C_X = " + std::to_string(cx) + " < 2");
  }
  MorseProfile prof = morse_profile(p, xi);
  HomologyRing ring(fan);
  WidenessSummary out;
  out.minimal_maslov = cx;
  out.betti_R = prof.betti_R;
  out.rank_mod.assign(static_cast<std::size_t>(cx), 0);
  for (std::size_t k = 0; k < prof.betti_R.size(); ++k) {
    out.rank_mod[k % static_cast<std::size_t>(cx)] += prof.betti_R[k];
    out.displacement_bound += prof.betti_R[k];
  }
  out.wide = compare_with_homology(prof, ring).ok;
  return out;
}

}  // namespace toric
