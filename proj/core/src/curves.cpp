#include "toric/curves.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

LiftComponent LiftComponent::zero_component() {
  LiftComponent c;
  c.zero = true;
  c.leading = 0.0;
  return c;
}

LiftComponent LiftComponent::constant(double a) {
  LiftComponent c;
  c.leading = a;
  return c;
}

Complex LiftComponent::evaluate(Complex z) const {
  if (zero) return 0.0;
  Complex v = leading;
  for (const auto& p : complex_roots) v *= (z - p) * (z - std::conj(p));
  for (double q : real_roots) v *= (z - q);
  return v;
}

bool LiftComponent::vanishes_at(Complex z) const {
  if (zero) return true;
  for (double q : real_roots)
    if (z == Complex(q, 0.0)) return true;
  for (const auto& p : complex_roots)
    if (z == p || z == std::conj(p)) return true;
  return false;
}

RealDiscLift::RealDiscLift(std::vector<LiftComponent> components)
    : components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.zero) continue;
    if (c.leading == 0.0 || !std::isfinite(c.leading)) {
      throw Error(Errc::InvalidLift, "component " + std::to_string(i + 1) +
                                         " has zero leading coefficient; mark it as zero");
    }
    for (const auto& p : c.complex_roots) {
      if (!(p.imag() > 0.0)) {
        std::ostringstream os;
        os << "component " << i + 1 << " complex root " << p.real() << "+" << p.imag()
           << "i must have positive imaginary part";
        throw Error(Errc::InvalidLift, os.str());
      }
    }
  }
}

RealDiscLift RealDiscLift::constant(std::size_t num_rays) {
  return RealDiscLift(std::vector<LiftComponent>(num_rays, LiftComponent::constant()));
}

IndexSet RealDiscLift::zero_set() const {
  IndexSet s;
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].zero) s.push_back(i);
  return s;
}

std::vector<std::size_t> RealDiscLift::degrees() const {
  std::vector<std::size_t> d;
  for (const auto& c : components_) d.push_back(c.degree());
  return d;
}

std::vector<Complex> RealDiscLift::evaluate(Complex z) const {
  std::vector<Complex> out;
  for (const auto& c : components_) out.push_back(c.evaluate(z));
  return out;
}

namespace {

std::string format_complex(Complex z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

LiftValidation validate_lift(const Fan& fan, const RealDiscLift& lift) {
  if (lift.size() != fan.num_rays()) {
    throw Error(Errc::WrongLength, "lift has " + std::to_string(lift.size()) +
                                       " components for " + std::to_string(fan.num_rays()) +
                                       " rays");
  }
  LiftValidation out;
  out.zero_set = lift.zero_set();
  if (!fan.is_cone(out.zero_set)) {
    throw Error(Errc::OutsideU, "generic z: I_z = " + to_string(out.zero_set, true) +
                                    " does not span a cone");
  }
  std::vector<Complex> locations;
  for (const auto& c : lift.components()) {
    if (c.zero) continue;
    for (double q : c.real_roots) locations.emplace_back(q, 0.0);
    for (const auto& p : c.complex_roots) locations.push_back(p);
  }
  std::vector<Complex> seen;
  for (const auto& z : locations) {
    if (std::find(seen.begin(), seen.end(), z) != seen.end()) continue;
    seen.push_back(z);
    IndexSet iz;
    for (std::size_t i = 0; i < lift.size(); ++i)
      if (lift.component(i).vanishes_at(z)) iz.push_back(i);
    if (!fan.is_cone(iz)) {
      throw Error(Errc::OutsideU, "z = " + format_complex(z) + ": I_z = " + to_string(iz, true) +
                                      " does not span a cone");
    }
    out.strata.push_back({z, std::move(iz)});
  }
  return out;
}

std::vector<Complex> chart_coords(const Fan& fan, const Cone& max_cone,
                                  std::span<const Complex> point) {
  if (point.size() != fan.num_rays()) {
    throw Error(Errc::WrongLength, "point has " + std::to_string(point.size()) +
                                       " coordinates for " + std::to_string(fan.num_rays()) +
                                       " rays");
  }
  if (max_cone.rays.size() != fan.dim()) {
    throw Error(Errc::NotACone, "chart requires an n-dimensional cone, got " +
                                    to_string(max_cone.rays, true));
  }
  for (std::size_t i = 0; i < point.size(); ++i) {
    bool in_cone = std::binary_search(max_cone.rays.begin(), max_cone.rays.end(), i);
    if (!in_cone && point[i] == 0.0) {
      throw Error(Errc::NotInChart, "z_" + std::to_string(i + 1) + " = 0 outside the chart of " +
                                        to_string(max_cone.rays, true));
    }
  }
  std::vector<IntVector> gens;
  for (std::size_t i : max_cone.rays) gens.push_back(fan.ray(i));
  DualBasis db = dual_basis(gens);
  std::vector<Complex> out;
  for (const auto& nu : db.dual) {
    Complex value = 1.0;
    for (std::size_t i = 0; i < point.size(); ++i) {
      long e = dot(nu, fan.ray(i)).get_si();
      if (e == 0) continue;
      Complex f = e > 0 ? point[i] : 1.0 / point[i];
      for (long r = 0; r < std::labs(e); ++r) value *= f;
    }
    out.push_back(value);
  }
  return out;
}

Complex Mobius::apply(Complex z) const {
  return (a.get_d() * z + b.get_d()) / (c.get_d() * z + d.get_d());
}

std::string Mobius::to_string() const {
  return "z -> (" + a.get_str() + "*z + " + b.get_str() + ") / (" + c.get_str() + "*z + " +
         d.get_str() + ")";
}

Mobius suggested_reparametrization(const RealDiscLift& lift) {
  std::vector<double> roots;
  for (const auto& c : lift.components())
    if (!c.zero) roots.insert(roots.end(), c.real_roots.begin(), c.real_roots.end());
  long r = 0;
  while (std::find(roots.begin(), roots.end(), static_cast<double>(r)) != roots.end()) ++r;
  return Mobius{Rational(r), Rational(-1), Rational(1), Rational(0)};
}

InfinityStratum infinity_stratum(const Fan& fan, const RealDiscLift& lift) {
  try {
    validate_lift(fan, lift);
  } catch (const Error& e) {
    throw Error(Errc::InvalidLift, std::string(e.name()) + ": " + e.detail());
  }
  const std::size_t n = fan.dim();
  const IndexSet i0 = lift.zero_set();
  const auto degrees = lift.degrees();

  std::vector<IntVector> gens;
  for (std::size_t i : i0) gens.push_back(fan.ray(i));
  std::vector<IntVector> basis = gens;
  for (auto& v : extend_to_basis(gens, n)) basis.push_back(std::move(v));
  DualBasis db = dual_basis(basis);
  const std::size_t q = n - i0.size();
  auto quotient = [&](const IntVector& v) {
    IntVector out(q);
    for (std::size_t t = 0; t < q; ++t) out[t] = dot(db.dual[i0.size() + t], v);
    return out;
  };

  InfinityStratum out;
  out.multiplicity.assign(fan.num_rays(), Integer(0));
  out.degree_vector.assign(q, Integer(0));
  for (std::size_t j = 0; j < fan.num_rays(); ++j) {
    if (lift.component(j).zero || degrees[j] == 0) continue;
    IntVector vb = quotient(fan.ray(j));
    for (std::size_t t = 0; t < q; ++t) out.degree_vector[t] += Integer(static_cast<unsigned long>(degrees[j])) * vb[t];
  }
  out.indices = i0;
  if (out.clear()) return out;

  RatVector target(q);
  for (std::size_t t = 0; t < q; ++t) target[t] = -out.degree_vector[t];
  for (const auto& tau : fan.max_cones()) {
    if (!is_subset(i0, tau.rays)) continue;
    IndexSet rest;
    for (std::size_t j : tau.rays)
      if (!std::binary_search(i0.begin(), i0.end(), j)) rest.push_back(j);
    if (rest.size() != q) continue;
    RatMatrix a(q, RatVector(q));
    for (std::size_t k = 0; k < q; ++k) {
      IntVector vb = quotient(fan.ray(rest[k]));
      for (std::size_t t = 0; t < q; ++t) a[t][k] = vb[t];
    }
    auto coeffs = solve_linear(a, target);
    if (!coeffs) continue;
    if (std::any_of(coeffs->begin(), coeffs->end(), [](const Rational& x) { return x < 0; }))
      continue;
    for (std::size_t k = 0; k < q; ++k) {
      if ((*coeffs)[k] == 0) continue;
      out.limit_cone.push_back(rest[k]);
      out.multiplicity[rest[k]] = (*coeffs)[k].get_num();
    }
    out.indices = make_index_set([&] {
      std::vector<std::size_t> all = i0;
      all.insert(all.end(), out.limit_cone.begin(), out.limit_cone.end());
      return all;
    }());
    return out;
  }
  throw Error(Errc::NotComplete, "no cone of the star of " + to_string(i0, true) +
                                     " contains -m = " + to_string(out.degree_vector));
}

RealDiscLift reparametrize(const Fan& fan, const RealDiscLift& lift, const Mobius& phi) {
  if (phi.determinant() == 0) {
    throw Error(Errc::DegenerateMobius, phi.to_string() + " has ad - bc = 0");
  }
  const InfinityStratum inf = infinity_stratum(fan, lift);
  const double a = phi.a.get_d(), b = phi.b.get_d(), c = phi.c.get_d(), d = phi.d.get_d();
  const bool affine = phi.c == 0;

  std::vector<LiftComponent> out;
  for (std::size_t i = 0; i < lift.size(); ++i) {
    const LiftComponent& w = lift.component(i);
    if (w.zero) {
      out.push_back(LiftComponent::zero_component());
      continue;
    }
    LiftComponent nw;
    nw.leading = w.leading;
    // Each factor (phi(z) - r) * (c z + d) = (a - r c) z + (b - r d).
    for (double r : w.real_roots) {
      double s = a - r * c;
      if (s != 0.0) {
        nw.leading *= s;
        nw.real_roots.push_back((r * d - b) / s);
      } else {
        nw.leading *= b - r * d;
      }
    }
    for (const auto& p : w.complex_roots) {
      Complex s = a - p * c;
      nw.leading *= std::norm(s);
      Complex np = (p * d - b) / s;
      nw.complex_roots.push_back(np.imag() > 0 ? np : std::conj(np));
    }
    if (affine) {
      nw.leading /= std::pow(d, static_cast<double>(w.degree()));
    } else {
      // Remaining (c z + d)^{e_i} moves the contact at infinity to z = -d/c.
      unsigned long e = inf.multiplicity[i].get_ui();
      for (unsigned long k = 0; k < e; ++k) {
        nw.leading *= c;
        nw.real_roots.push_back(-d / c);
      }
    }
    out.push_back(std::move(nw));
  }
  return RealDiscLift(std::move(out));
}

MaslovResult maslov_zero_count(const Fan& fan, const RealDiscLift& lift) {
  validate_lift(fan, lift);
  const IndexSet i0 = lift.zero_set();
  if (!i0.empty()) {
    throw Error(Errc::NotApplicable, "u lies in the divisors " + to_string(i0, true) +
                                         "; use the general formula");
  }
  InfinityStratum inf = infinity_stratum(fan, lift);
  if (!inf.indices.empty()) {
    throw Error(Errc::NotApplicable,
                "u(infinity) lies on D_" + to_string(inf.indices, true) + "; reparametrize, e.g. " +
                    suggested_reparametrization(lift).to_string());
  }
  MaslovResult res;
  res.method = MaslovMethod::ZeroCount;
  res.mu = 0;
  for (auto d : lift.degrees()) res.mu += static_cast<unsigned long>(d);
  return res;
}

MaslovResult maslov_general(const Fan& fan, const RealDiscLift& lift,
                            const std::optional<std::vector<IntVector>>& extension) {
  if (lift.size() != fan.num_rays()) {
    throw Error(Errc::WrongLength, "lift has " + std::to_string(lift.size()) +
                                       " components for " + std::to_string(fan.num_rays()) +
                                       " rays");
  }
  const IndexSet i0 = lift.zero_set();
  if (!fan.is_cone(i0)) {
    throw Error(Errc::NotACone, "I_0 = " + to_string(i0, true) + " does not span a cone");
  }
  InfinityStratum inf = infinity_stratum(fan, lift);
  if (!inf.clear()) {
    throw Error(Errc::InfinityConditionFails,
                "u(infinity) lies on D_" + to_string(inf.limit_cone, true) +
                    "; reparametrize, e.g. " + suggested_reparametrization(lift).to_string());
  }
  DivisorExpansion ex = divisor_expansion(fan, i0, extension);
  MaslovResult res;
  res.method = MaslovMethod::GeneralFormula;
  res.zero_set = i0;
  res.extension = ex.extension;
  res.mu = 0;
  const auto degrees = lift.degrees();
  for (std::size_t j = 0; j < fan.num_rays(); ++j) {
    if (std::binary_search(i0.begin(), i0.end(), j)) continue;
    Integer weight = 1;
    for (std::size_t k = 0; k < i0.size(); ++k) weight -= ex.pairing[k][j];
    res.mu += weight * static_cast<unsigned long>(degrees[j]);
  }
  return res;
}

DoubleSymmetryReport verify_double_symmetry(const Fan& fan, const RealDiscLift& lift,
                                            std::size_t samples, std::uint64_t seed) {
  InfinityStratum inf = infinity_stratum(fan, lift);  // validates
  const IndexSet i0 = lift.zero_set();
  DoubleSymmetryReport rep;

  auto chart = fan.max_cone_containing(i0);
  if (!chart) throw Error(Errc::InvalidLift, "no max cone contains " + to_string(i0, true));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  std::uniform_real_distribution<double> im(0.1, 3.0);
  std::size_t attempts = 0;
  while (rep.samples < samples && attempts < 100 * (samples + 1)) {
    ++attempts;
    Complex z(re(rng), im(rng));
    auto wz = lift.evaluate(z);
    auto wc = lift.evaluate(std::conj(z));
    bool degenerate = false;
    for (std::size_t i = 0; i < wz.size(); ++i) {
      bool in_cone = std::binary_search(chart->rays.begin(), chart->rays.end(), i);
      if (!in_cone && std::abs(wz[i]) < 1e-12) degenerate = true;
    }
    if (degenerate) continue;
    auto cz = chart_coords(fan, *chart, wz);
    auto cc = chart_coords(fan, *chart, wc);
    for (std::size_t k = 0; k < cz.size(); ++k) {
      double scale = std::max(1.0, std::abs(cz[k]));
      rep.max_deviation = std::max(rep.max_deviation, std::abs(cc[k] - std::conj(cz[k])) / scale);
    }
    ++rep.samples;
  }
  rep.symmetric = rep.samples == samples && rep.max_deviation <= kSymmetryTolerance;

  // Intersection numbers: zeros in C, contact at infinity, and the divisors
  // containing u expanded through the others.
  const auto degrees = lift.degrees();
  DivisorExpansion ex = divisor_expansion(fan, i0);
  rep.curve_class.assign(fan.num_rays(), Integer(0));
  for (std::size_t j = 0; j < fan.num_rays(); ++j) {
    if (std::binary_search(i0.begin(), i0.end(), j)) continue;
    rep.curve_class[j] = Integer(static_cast<unsigned long>(degrees[j])) + inf.multiplicity[j];
  }
  for (std::size_t k = 0; k < i0.size(); ++k) {
    Integer s = 0;
    for (std::size_t j = 0; j < fan.num_rays(); ++j) {
      if (std::binary_search(i0.begin(), i0.end(), j)) continue;
      s += ex.pairing[k][j] * rep.curve_class[j];
    }
    rep.curve_class[i0[k]] = -s;
  }
  rep.c1 = chern_pairing(fan, rep.curve_class);

  if (inf.clear()) {
    rep.mu = maslov_general(fan, lift).mu;
  } else {
    Mobius phi = suggested_reparametrization(lift);
    rep.reparametrization = phi;
    rep.mu = maslov_general(fan, reparametrize(fan, lift, phi)).mu;
  }
  rep.agrees = rep.c1 == rep.mu;
  return rep;
}

}  // namespace toric
