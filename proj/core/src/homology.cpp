#include "toric/homology.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

namespace {

bool odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

}  // namespace

bool HomologyClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::uint8_t c) { return c == 0; });
}

HomologyRing::HomologyRing(const Fan& fan) : fan_(fan) {
  require_valid(fan_);
  if (!detail::is_complete_unchecked(fan_)) throw Error(Errc::NotComplete, "fan does not cover R^n");

  const std::size_t n = fan_.dim();
  const std::size_t nr = fan_.num_rays();
  presentation_.num_generators = nr;
  presentation_.dim = n;
  presentation_.sr_generators = primitive_collections(fan_);
  if (!fan_.max_cones().empty()) presentation_.eliminated = fan_.max_cones().front().rays;

  std::vector<IntVector> cone_basis;
  for (std::size_t i : presentation_.eliminated) cone_basis.push_back(fan_.ray(i));
  DualBasis db = dual_basis(cone_basis);
  for (std::size_t k = 0; k < presentation_.eliminated.size(); ++k) {
    std::vector<std::uint8_t> rel(nr);
    for (std::size_t i = 0; i < nr; ++i) rel[i] = odd(dot(db.dual[k], fan_.ray(i))) ? 1 : 0;
    presentation_.linear_relations.push_back(std::move(rel));
  }

  for (std::size_t i = 0; i < nr; ++i)
    if (!std::binary_search(presentation_.eliminated.begin(), presentation_.eliminated.end(), i))
      free_rays_.push_back(i);
  ring_ = gf2::PolyRing(std::vector<std::uint32_t>(free_rays_.size(), 1));

  // Over GF(2): x_{sigma_k} = sum_{j free} <eps_k, v_j> x_j.
  divisor_images_.assign(nr, ring_.zero());
  for (std::size_t f = 0; f < free_rays_.size(); ++f) divisor_images_[free_rays_[f]] = ring_.variable(f);
  for (std::size_t k = 0; k < presentation_.eliminated.size(); ++k) {
    gf2::Polynomial img;
    for (std::size_t f = 0; f < free_rays_.size(); ++f)
      if (presentation_.linear_relations[k][free_rays_[f]]) img = ring_.add(img, ring_.variable(f));
    divisor_images_[presentation_.eliminated[k]] = img;
  }

  std::vector<gf2::Polynomial> gens;
  for (const auto& p : presentation_.sr_generators) {
    gf2::Polynomial m = ring_.one();
    for (std::size_t i : p) m = ring_.mul(m, divisor_images_[i]);
    gens.push_back(std::move(m));
  }
  groebner_ = ring_.groebner_basis(std::move(gens));

  for (std::size_t d = 0; d <= n; ++d) basis_.push_back(ring_.standard_monomials(groebner_, d));
  if (!ring_.standard_monomials(groebner_, n + 1).empty()) {
    throw Error(Errc::InvalidFan, "quotient ring has classes above the top degree");
  }
}

std::size_t HomologyRing::rank(std::size_t codegree) const {
  if (codegree % 2 || codegree / 2 >= basis_.size()) return 0;
  return basis_[codegree / 2].size();
}

std::size_t HomologyRing::total_rank() const {
  std::size_t t = 0;
  for (const auto& b : basis_) t += b.size();
  return t;
}

const std::vector<gf2::Exponents>& HomologyRing::basis(std::size_t codegree) const {
  static const std::vector<gf2::Exponents> empty;
  if (codegree % 2 || codegree / 2 >= basis_.size()) return empty;
  return basis_[codegree / 2];
}

std::string HomologyRing::monomial_label(const gf2::Exponents& m) const {
  std::string out;
  for (std::size_t f = 0; f < m.size(); ++f) {
    if (!m[f]) continue;
    if (!out.empty()) out += "*";
    out += "D" + std::to_string(free_rays_[f] + 1);
    if (m[f] > 1) out += "^" + std::to_string(m[f]);
  }
  return out.empty() ? "1" : out;
}

HomologyClass HomologyRing::zero(std::size_t codegree) const {
  return HomologyClass{codegree, std::vector<std::uint8_t>(rank(codegree), 0)};
}

HomologyClass HomologyRing::unit() const { return from_polynomial(ring_.one(), 0); }

HomologyClass HomologyRing::point() const {
  HomologyClass c = zero(2 * dim());
  if (c.coords.size() != 1) throw Error(Errc::InvalidFan, "top degree does not have rank 1");
  c.coords[0] = 1;
  return c;
}

HomologyClass HomologyRing::divisor(std::size_t i) const {
  if (i >= divisor_images_.size()) {
    throw Error(Errc::UnknownClass, "no divisor D" + std::to_string(i + 1));
  }
  return from_polynomial(divisor_images_[i], 2);
}

HomologyClass HomologyRing::basis_class(std::size_t codegree, std::size_t index) const {
  HomologyClass c = zero(codegree);
  c.coords.at(index) = 1;
  return c;
}

gf2::Polynomial HomologyRing::to_polynomial(const HomologyClass& c) const {
  const auto& b = basis(c.codegree);
  if (c.coords.size() != b.size()) {
    throw Error(Errc::DimensionMismatch, "class coordinates do not match the basis size");
  }
  std::vector<gf2::Exponents> terms;
  for (std::size_t k = 0; k < b.size(); ++k)
    if (c.coords[k]) terms.push_back(b[k]);
  return ring_.from_terms(std::move(terms));
}

HomologyClass HomologyRing::from_polynomial(const gf2::Polynomial& f, std::size_t codegree) const {
  gf2::Polynomial nf = ring_.normal_form(f, groebner_);
  HomologyClass c = zero(codegree);
  const auto& b = basis(codegree);
  for (const auto& t : nf.terms()) {
    if (2 * ring_.degree(t) != codegree) {
      throw Error(Errc::InhomogeneousClass, "polynomial term of codegree " +
                                                std::to_string(2 * ring_.degree(t)) +
                                                " in a class of codegree " +
                                                std::to_string(codegree));
    }
    auto it = std::find(b.begin(), b.end(), t);
    c.coords.at(static_cast<std::size_t>(it - b.begin())) ^= 1;
  }
  return c;
}

HomologyClass intersection_product(const HomologyRing& ring, const HomologyClass& a,
                                   const HomologyClass& b) {
  const std::size_t codeg = a.codegree + b.codegree;
  if (codeg > 2 * ring.dim()) return ring.zero(codeg);
  gf2::Polynomial prod =
      ring.poly_ring().mul(ring.to_polynomial(a), ring.to_polynomial(b));
  return ring.from_polynomial(prod, codeg);
}

Integer chern_pairing(const Fan& fan, const IntVector& lambda) {
  if (lambda.size() != fan.num_rays()) {
    throw Error(Errc::NotACurveClass, "class has " + std::to_string(lambda.size()) +
                                          " entries for " + std::to_string(fan.num_rays()) +
                                          " rays");
  }
  IntVector image(fan.dim(), Integer(0));
  Integer sum = 0;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    sum += lambda[j];
    for (std::size_t k = 0; k < fan.dim(); ++k) image[k] += lambda[j] * fan.ray(j)[k];
  }
  if (!is_zero(image)) {
    throw Error(Errc::NotACurveClass,
                to_string(lambda) + " maps to " + to_string(image) + " under e_j -> v_j");
  }
  return sum;
}

DivisorExpansion divisor_expansion(const Fan& fan, const IndexSet& zero_set,
                                   const std::optional<std::vector<IntVector>>& extension) {
  const std::size_t n = fan.dim();
  for (std::size_t i : zero_set) {
    if (i >= fan.num_rays()) throw Error(Errc::NotACone, "ray index " + std::to_string(i) + " out of range");
  }
  if (!fan.is_cone(zero_set)) {
    throw Error(Errc::NotACone, "rays " + to_string(zero_set, true) + " do not span a cone");
  }
  DivisorExpansion out;
  out.zero_set = zero_set;
  std::vector<IntVector> gens;
  for (std::size_t i : zero_set) gens.push_back(fan.ray(i));
  if (extension) {
    if (gens.size() + extension->size() != n) {
      throw Error(Errc::BadExtension, std::to_string(extension->size()) +
                                          " extension vectors for a cone of dimension " +
                                          std::to_string(gens.size()) + " in Z^" +
                                          std::to_string(n));
    }
    out.extension = *extension;
  } else {
    out.extension = extend_to_basis(gens, n);
  }
  std::vector<IntVector> full = gens;
  full.insert(full.end(), out.extension.begin(), out.extension.end());
  for (const auto& v : full) {
    if (v.size() != n) throw Error(Errc::BadExtension, "extension vector " + to_string(v) + " has wrong length");
  }
  Integer det = determinant(IntMatrix::from_rows(full, n));
  if (abs(det) != 1) {
    std::string list;
    for (const auto& v : out.extension) list += to_string(v);
    throw Error(Errc::BadExtension,
                list + " does not complete the cone to a Z-basis (determinant " + det.get_str() + ")");
  }
  DualBasis db = dual_basis(full);
  for (std::size_t k = 0; k < zero_set.size(); ++k) {
    out.epsilons.push_back(db.dual[k]);
    std::vector<Integer> row;
    for (std::size_t j = 0; j < fan.num_rays(); ++j) row.push_back(dot(db.dual[k], fan.ray(j)));
    out.pairing.push_back(std::move(row));
  }
  return out;
}

}  // namespace toric
