#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "toric/error.hpp"
#include "toric/homology.hpp"
#include "toric/morse.hpp"
#include "toric/quantum.hpp"

namespace toric::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw Error(Errc::ParseError, path + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) parse_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(path + "." + key, "missing");
  return *it;
}

long parse_long(const json& v, const std::string& path) {
  if (!v.is_number_integer()) parse_fail(path, "expected an integer");
  return v.get<long>();
}

IntVector parse_int_vector(const json& v, const std::string& path) {
  if (!v.is_array()) parse_fail(path, "expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.emplace_back(parse_long(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

double parse_double(const json& v, const std::string& path) {
  if (!v.is_number()) parse_fail(path, "expected a number");
  return v.get<double>();
}

json int_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json rat_json(const Rational& q) {
  if (q.get_den() == 1) return int_json(q.get_num());
  return q.get_str();
}

json vec_json(std::span<const Integer> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

json vec_json(std::span<const Rational> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_json(x));
  return a;
}

json set_json(const IndexSet& s) {
  json a = json::array();
  for (auto i : s) a.push_back(i);
  return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep = ",") {
  std::vector<std::string> parts;
  for (const auto& x : v) {
    std::ostringstream os;
    os << x;
    parts.push_back(os.str());
  }
  return join(parts, sep);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::string divisor_list(const IndexSet& s) {
  if (s.empty()) return "{}";
  std::vector<std::string> parts;
  for (auto i : s) parts.push_back("D" + std::to_string(i + 1));
  return "{" + join(parts, ",") + "}";
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], display_width(r[c]));
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& r = rows_[k];
      std::string line = "  ";
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - display_width(r[c]) + 2, ' ');
      }
      out << line << "\n";
      if (k == 0) {
        std::size_t total = 0;
        for (auto w : width) total += w + 2;
        out << "  " << std::string(total - 2, '-') << "\n";
      }
    }
  }

 private:
  // Column widths count code points, not bytes ("·" and "μ" are two bytes).
  static std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char ch : s)
      if ((ch & 0xC0) != 0x80) ++n;
    return n;
  }
  std::vector<std::vector<std::string>> rows_;
};

IntVector parse_xi(const std::string& text) {
  IntVector xi;
  for (const auto& part : split(text, ',')) {
    long v = 0;
    try {
      std::size_t used = 0;
      v = std::stol(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "--xi: '" + part + "' is not an integer");
    }
    xi.emplace_back(v);
  }
  return xi;
}

Mobius parse_mobius(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 4) throw Error(Errc::ParseError, "--mobius: expected a,b,c,d");
  std::vector<Rational> v;
  for (std::size_t i = 0; i < 4; ++i) v.push_back(parse_rational(json(parts[i]), "--mobius[" + std::to_string(i) + "]"));
  return Mobius{v[0], v[1], v[2], v[3]};
}

}  // namespace

Rational parse_rational(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(Integer(value.get<long>()));
  if (!value.is_string()) parse_fail(path, "expected an integer or a \"p/q\" string");
  static const std::regex pattern(R"(\s*(-?\d+)(\s*/\s*(\d+))?\s*)");
  std::smatch m;
  const std::string s = value.get<std::string>();
  if (!std::regex_match(s, m, pattern)) parse_fail(path, "'" + s + "' is not a rational \"p/q\"");
  Integer num(m[1].str());
  Integer den(m[3].matched ? m[3].str() : std::string("1"));
  if (den == 0) parse_fail(path, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Polytope parse_polytope(const json& doc) {
  Polytope p;
  long dim = parse_long(field(doc, "dim", "$"), "$.dim");
  if (dim <= 0) parse_fail("$.dim", "must be positive");
  p.dim = static_cast<std::size_t>(dim);
  const json& facets = field(doc, "facets", "$");
  if (!facets.is_array()) parse_fail("$.facets", "expected an array");
  for (std::size_t i = 0; i < facets.size(); ++i) {
    std::string path = "$.facets[" + std::to_string(i) + "]";
    IntVector normal = parse_int_vector(field(facets[i], "normal", path), path + ".normal");
    if (normal.size() != p.dim) {
      parse_fail(path + ".normal", "has length " + std::to_string(normal.size()) + ", expected " +
                                       std::to_string(p.dim));
    }
    p.normals.push_back(std::move(normal));
    p.offsets.push_back(parse_rational(field(facets[i], "offset", path), path + ".offset"));
  }
  try {
    check_well_formed(p);
  } catch (const Error& e) {
    throw Error(Errc::ValidationError, std::string(e.name()) + ": " + e.detail());
  }
  return p;
}

Fan parse_fan(const json& doc) {
  long dim = parse_long(field(doc, "dim", "$"), "$.dim");
  if (dim <= 0) parse_fail("$.dim", "must be positive");
  const json& rays_j = field(doc, "rays", "$");
  if (!rays_j.is_array()) parse_fail("$.rays", "expected an array");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < rays_j.size(); ++i) {
    std::string path = "$.rays[" + std::to_string(i) + "]";
    IntVector r = parse_int_vector(rays_j[i], path);
    if (r.size() != static_cast<std::size_t>(dim)) parse_fail(path, "has length " + std::to_string(r.size()));
    rays.push_back(std::move(r));
  }
  const json& cones_j = field(doc, "max_cones", "$");
  if (!cones_j.is_array()) parse_fail("$.max_cones", "expected an array");
  std::vector<IndexSet> cones;
  for (std::size_t i = 0; i < cones_j.size(); ++i) {
    std::string path = "$.max_cones[" + std::to_string(i) + "]";
    if (!cones_j[i].is_array()) parse_fail(path, "expected an array of ray indices");
    IndexSet c;
    for (std::size_t k = 0; k < cones_j[i].size(); ++k) {
      long idx = parse_long(cones_j[i][k], path + "[" + std::to_string(k) + "]");
      if (idx < 0 || static_cast<std::size_t>(idx) >= rays.size()) {
        parse_fail(path + "[" + std::to_string(k) + "]", "ray index " + std::to_string(idx) + " out of range");
      }
      c.push_back(static_cast<std::size_t>(idx));
    }
    cones.push_back(std::move(c));
  }
  Fan fan(static_cast<std::size_t>(dim), std::move(rays), std::move(cones));
  FanReport rep = validate_fan(fan);
  if (!rep.valid) throw Error(Errc::ValidationError, join(rep.failures, "; "));
  return fan;
}

DiscInput parse_disc(const json& doc) {
  DiscInput out;
  if (!doc.is_object()) parse_fail("$", "expected an object");
  if (doc.contains("fan")) out.fan = doc.at("fan");
  const json& comps = field(doc, "components", "$");
  if (!comps.is_array()) parse_fail("$.components", "expected an array");
  std::vector<LiftComponent> components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::string path = "$.components[" + std::to_string(i) + "]";
    const json& c = comps[i];
    if (!c.is_object()) parse_fail(path, "expected an object");
    if (c.contains("zero")) {
      if (!c.at("zero").is_boolean()) parse_fail(path + ".zero", "expected a boolean");
      if (c.at("zero").get<bool>()) {
        if (c.contains("a") || c.contains("real_roots") || c.contains("complex_roots")) {
          parse_fail(path, "a zero component takes no coefficients");
        }
        components.push_back(LiftComponent::zero_component());
        continue;
      }
    }
    LiftComponent lc;
    lc.leading = c.contains("a") ? parse_double(c.at("a"), path + ".a") : 1.0;
    if (c.contains("real_roots")) {
      const json& rr = c.at("real_roots");
      if (!rr.is_array()) parse_fail(path + ".real_roots", "expected an array");
      for (std::size_t k = 0; k < rr.size(); ++k)
        lc.real_roots.push_back(parse_double(rr[k], path + ".real_roots[" + std::to_string(k) + "]"));
    }
    if (c.contains("complex_roots")) {
      const json& cr = c.at("complex_roots");
      if (!cr.is_array()) parse_fail(path + ".complex_roots", "expected an array");
      for (std::size_t k = 0; k < cr.size(); ++k) {
        std::string rp = path + ".complex_roots[" + std::to_string(k) + "]";
        if (!cr[k].is_array() || cr[k].size() != 2) parse_fail(rp, "expected [re, im]");
        lc.complex_roots.emplace_back(parse_double(cr[k][0], rp + "[0]"), parse_double(cr[k][1], rp + "[1]"));
      }
    }
    components.push_back(std::move(lc));
  }
  out.lift = RealDiscLift(std::move(components));
  if (doc.contains("extension")) {
    const json& ex = doc.at("extension");
    if (!ex.is_array()) parse_fail("$.extension", "expected an array of vectors");
    std::vector<IntVector> vecs;
    for (std::size_t k = 0; k < ex.size(); ++k)
      vecs.push_back(parse_int_vector(ex[k], "$.extension[" + std::to_string(k) + "]"));
    out.extension = std::move(vecs);
  }
  return out;
}

json to_json(const Polytope& p) {
  json facets = json::array();
  for (std::size_t i = 0; i < p.num_facets(); ++i) {
    json offset = p.offsets[i].get_den() == 1 ? int_json(p.offsets[i].get_num()) : json(p.offsets[i].get_str());
    facets.push_back({{"normal", vec_json(p.normals[i])}, {"offset", offset}});
  }
  return {{"dim", p.dim}, {"facets", facets}};
}

json to_json(const Fan& f) {
  json rays = json::array();
  for (const auto& r : f.rays()) rays.push_back(vec_json(r));
  json cones = json::array();
  for (const auto& c : f.max_cones()) cones.push_back(set_json(c.rays));
  return {{"dim", f.dim()}, {"rays", rays}, {"max_cones", cones}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

Input parse_input(const std::optional<std::string>& builtin_id, const std::optional<std::string>& path) {
  Input in;
  if (builtin_id) {
    Builtin b = builtin(*builtin_id);
    in.source = "builtin:" + b.id;
    in.polytope = b.polytope;
    in.fan = b.fan;
    in.unit_name = b.unit_name;
    in.real_name = b.real_name;
    return in;
  }
  json doc = load_json_file(*path);
  in.source = "file:" + *path;
  if (doc.is_object() && doc.contains("facets")) {
    in.polytope = parse_polytope(doc);
  } else if (doc.is_object() && doc.contains("rays")) {
    in.fan = parse_fan(doc);
  } else {
    throw Error(Errc::ParseError, *path + ": expected a polytope (\"facets\") or a fan (\"rays\")");
  }
  return in;
}

Fan input_fan(const Input& in) {
  if (in.fan) return *in.fan;
  Fan f = normal_fan(*in.polytope);
  FanReport rep = validate_fan(f);
  if (!rep.valid) throw Error(Errc::NotDelzant, "normal fan: " + join(rep.failures, "; "));
  return f;
}

namespace {

struct Options {
  std::optional<std::string> builtin;
  std::optional<std::string> file;
  std::optional<std::string> xi;
  std::optional<std::string> disc;
  std::optional<std::string> product;
  std::optional<std::string> mobius;
  bool json = false;
};

json envelope(const std::string& verb, const std::string& source) {
  return {{"schema", kSchemaVersion}, {"verb", verb}, {"source", source}};
}

std::string homology_label(const HomologyRing& h, std::size_t codeg, std::size_t idx,
                           const std::string& unit, const std::string& pt) {
  if (codeg == 0) return unit;
  if (codeg == 2 * h.dim()) return pt;
  return h.monomial_label(h.basis(codeg)[idx]);
}

std::string class_label(const HomologyRing& h, const HomologyClass& c, const std::string& unit,
                        const std::string& pt = "[pt]") {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < c.coords.size(); ++k)
    if (c.coords[k]) parts.push_back(homology_label(h, c.codegree, k, unit, pt));
  return parts.empty() ? "0" : join(parts, " + ");
}

// Parses D<k>, pt, X and the display name of the fundamental class.
HomologyClass parse_class(const HomologyRing& h, const std::string& raw,
                          const std::vector<std::string>& unit_names) {
  std::string name = raw;
  if (name.size() > 2 && name.substr(name.size() - 2) == "_R") name.resize(name.size() - 2);
  if (std::find(unit_names.begin(), unit_names.end(), name) != unit_names.end()) return h.unit();
  if (name == "pt" || name == "[pt]") return h.point();
  static const std::regex divisor(R"(D(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, divisor)) {
    std::size_t k = std::stoul(m[1].str());
    if (k >= 1) return h.divisor(k - 1);
  }
  throw Error(Errc::UnknownClass, "'" + raw + "' (use D1..D" + std::to_string(h.fan().num_rays()) +
                                      ", pt or " + unit_names.front() + ")");
}

std::vector<std::string> product_factors(const Options& o) {
  auto parts = split(*o.product, ',');
  if (parts.empty()) throw Error(Errc::ParseError, "--product: expected C1,C2[,C3]");
  return parts;
}

// ---------------------------------------------------------------------------

int verb_check(const Options& o, std::ostream& out, std::ostream& err) {
  Input in = parse_input(o.builtin, o.file);
  json j = envelope("check", in.source);
  bool ok = true;
  std::string first_failure;
  if (in.polytope) {
    const Polytope& p = *in.polytope;
    auto verts = vertices(p);
    DelzantReport rep = delzant_check(p);
    json vj = json::array();
    for (const auto& v : verts) vj.push_back({{"point", vec_json(v.point)}, {"active_facets", set_json(v.active_facets)}});
    j["vertices"] = vj;
    j["lattice"] = rep.lattice;
    j["delzant"] = rep.delzant;
    j["certificates"] = rep.certificates;
    ok = rep.lattice && rep.delzant;
    if (!ok) first_failure = rep.certificates.empty() ? "not Delzant" : rep.certificates.front();
    bool fan_ok = false, complete = false;
    if (ok) {
      Fan f = normal_fan(p);
      FanReport fr = validate_fan(f);
      fan_ok = fr.valid;
      complete = fan_ok && is_complete(f);
      if (!fan_ok || !complete) {
        ok = false;
        first_failure = fan_ok ? "normal fan is not complete" : join(fr.failures, "; ");
      }
    }
    j["normal_fan"] = {{"valid", fan_ok}, {"complete", complete}};
    if (!o.json) {
      out << "source: " << in.source << "\n";
      Table t({"vertex", "active facets"});
      for (const auto& v : verts) t.add({to_string(v.point), divisor_list(v.active_facets)});
      t.print(out);
      out << "lattice: " << (rep.lattice ? "yes" : "no") << "\n";
      out << "Delzant: " << (rep.delzant ? "yes" : "no") << "\n";
      for (const auto& c : rep.certificates) out << "  certificate: " << c << "\n";
      out << "normal fan valid: " << (fan_ok ? "yes" : "no") << ", complete: " << (complete ? "yes" : "no")
          << "\n";
    }
  } else {
    const Fan& f = *in.fan;
    bool complete = is_complete(f);
    j["valid"] = true;
    j["complete"] = complete;
    ok = complete;
    if (!ok) first_failure = "fan does not cover R^n";
    if (!o.json) {
      out << "source: " << in.source << "\n";
      out << "fan valid: yes, complete: " << (complete ? "yes" : "no") << "\n";
    }
  }
  j["ok"] = ok;
  if (o.json) out << j.dump(2) << "\n";
  if (!ok) {
    err << "error: " << (in.polytope ? "NotDelzant" : "NotComplete") << ": " << first_failure << "\n";
    return kDomainError;
  }
  return kOk;
}

int verb_fan(const Options& o, std::ostream& out) {
  Input in = parse_input(o.builtin, o.file);
  Fan f = input_fan(in);
  FanReport rep = validate_fan(f);
  bool complete = is_complete(f);
  auto kernel = kernel_basis(f.ray_matrix());
  auto prims = primitive_collections(f);
  std::optional<Integer> cx;
  bool fano = false;
  if (complete) {
    cx = minimal_chern(f);
    fano = is_fano(f);
  }
  json j = envelope("fan", in.source);
  j["fan"] = to_json(f);
  j["valid"] = rep.valid;
  j["smooth"] = rep.smooth;
  j["complete"] = complete;
  json kj = json::array();
  for (const auto& k : kernel) kj.push_back(vec_json(k));
  j["kernel_basis"] = kj;
  json pj = json::array();
  for (const auto& p : prims) pj.push_back(set_json(p));
  j["primitive_collections"] = pj;
  j["minimal_chern"] = cx ? int_json(*cx) : json(nullptr);
  j["fano"] = fano;
  if (o.json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "source: " << in.source << "\n";
  out << "dim " << f.dim() << ", " << f.num_rays() << " rays, " << f.max_cones().size() << " max cones\n";
  Table t({"ray", "vector"});
  for (std::size_t i = 0; i < f.num_rays(); ++i) t.add({"v" + std::to_string(i + 1), to_string(f.ray(i))});
  t.print(out);
  std::vector<std::string> cones;
  for (const auto& c : f.max_cones()) cones.push_back(to_string(c.rays, true));
  out << "max cones: " << join(cones, " ") << "\n";
  out << "valid: " << (rep.valid ? "yes" : "no") << ", smooth: " << (rep.smooth ? "yes" : "no")
      << ", complete: " << (complete ? "yes" : "no") << "\n";
  std::vector<std::string> ks;
  for (const auto& k : kernel) ks.push_back(to_string(k));
  out << "kernel K = Z<" << join(ks, ", ") << ">\n";
  std::vector<std::string> ps;
  for (const auto& p : prims) ps.push_back(to_string(p, true));
  out << "primitive collections: " << join(ps, " ") << "\n";
  if (cx) out << "C_X = " << cx->get_str() << ", Fano: " << (fano ? "yes" : "no") << "\n";
  return kOk;
}

int verb_homology(const Options& o, std::ostream& out) {
  Input in = parse_input(o.builtin, o.file);
  HomologyRing h(input_fan(in));
  const std::size_t n = h.dim();
  const auto& pres = h.presentation();
  json j = envelope("homology", in.source);
  json ranks = json::array();
  json basis = json::object();
  for (std::size_t d = 0; d <= 2 * n; ++d) {
    std::size_t codeg = 2 * n - d;
    ranks.push_back(h.rank(codeg));
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < h.rank(codeg); ++k) labels.push_back(homology_label(h, codeg, k, in.unit_name, "[pt]"));
    if (!labels.empty()) basis["H" + std::to_string(d)] = labels;
  }
  j["ranks"] = ranks;  // by homological degree 0 .. 2n
  j["basis"] = basis;
  json sr = json::array();
  for (const auto& p : pres.sr_generators) sr.push_back(set_json(p));
  j["stanley_reisner"] = sr;
  j["eliminated"] = set_json(pres.eliminated);
  json rels = json::array();
  for (const auto& r : pres.linear_relations) rels.push_back(r);
  j["linear_relations"] = rels;

  std::optional<HomologyClass> prod;
  std::vector<std::string> factors;
  if (o.product) {
    factors = product_factors(o);
    std::vector<std::string> units = {"X", "[X]", "1", in.unit_name};
    prod = parse_class(h, factors[0], units);
    for (std::size_t i = 1; i < factors.size(); ++i)
      prod = intersection_product(h, *prod, parse_class(h, factors[i], units));
    j["product"] = {{"factors", factors},
                    {"homological_degree", prod->homological_degree(n)},
                    {"value", class_label(h, *prod, in.unit_name)}};
  }
  if (o.json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "source: " << in.source << "\n";
  std::vector<std::string> sr_labels;
  for (const auto& p : pres.sr_generators) {
    std::vector<std::string> parts;
    for (auto i : p) parts.push_back("D" + std::to_string(i + 1));
    sr_labels.push_back(join(parts, "*"));
  }
  out << "Stanley-Reisner ideal: (" << join(sr_labels, ", ") << ")\n";
  for (std::size_t k = 0; k < pres.eliminated.size(); ++k) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < pres.linear_relations[k].size(); ++i)
      if (pres.linear_relations[k][i]) parts.push_back("D" + std::to_string(i + 1));
    out << "linear relation: " << join(parts, " + ") << " = 0\n";
  }
  Table t({"H_d(X)", "codegree", "rank", "basis"});
  for (std::size_t d = 0; d <= 2 * n; ++d) {
    std::size_t codeg = 2 * n - d;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < h.rank(codeg); ++k) labels.push_back(homology_label(h, codeg, k, in.unit_name, "[pt]"));
    t.add({"H_" + std::to_string(d), std::to_string(codeg), std::to_string(h.rank(codeg)), join(labels, ", ")});
  }
  t.print(out);
  if (prod) out << join(factors, " . ") << " = " << class_label(h, *prod, in.unit_name) << "\n";
  return kOk;
}

int verb_morse(const Options& o, std::ostream& out) {
  Input in = parse_input(o.builtin, o.file);
  if (!in.polytope) throw Error(Errc::MismatchedInput, "morse needs a polytope, not a bare fan");
  const Polytope& p = *in.polytope;
  IntVector xi = o.xi ? parse_xi(*o.xi) : suggest_generic_xi(p);
  MorseProfile prof = morse_profile(p, xi);
  HomologyRing h(input_fan(in));
  HomologyComparison cmp = compare_with_homology(prof, h);
  json j = envelope("morse", in.source);
  j["xi"] = vec_json(xi);
  json cps = json::array();
  for (const auto& d : prof.data) {
    json dirs = json::array();
    for (const auto& e : d.edge_directions) dirs.push_back(vec_json(e));
    cps.push_back({{"vertex", vec_json(d.vertex.point)},
                   {"edge_directions", dirs},
                   {"index_R", d.index_R},
                   {"index_X", d.index_X}});
  }
  j["critical_points"] = cps;
  j["betti_R"] = prof.betti_R;
  j["betti_X"] = prof.betti_X;
  j["bound"] = prof.data.size();
  j["matches_homology"] = cmp.ok;
  if (o.json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "source: " << in.source << "\n";
  out << "xi = " << to_string(xi) << "\n";
  Table t({"vertex", "index_R", "index_X", "edges"});
  for (const auto& d : prof.data) {
    std::vector<std::string> es;
    for (const auto& e : d.edge_directions) es.push_back(to_string(e));
    t.add({to_string(d.vertex.point), std::to_string(d.index_R), std::to_string(d.index_X), join(es, " ")});
  }
  t.print(out);
  out << "betti_R = " << join_numbers(prof.betti_R) << "\n";
  out << "betti_X = " << join_numbers(prof.betti_X) << "\n";
  out << "bound = " << prof.data.size() << "\n";
  out << "matches H(X;Z2): " << (cmp.ok ? "yes" : "no") << "\n";
  for (const auto& m : cmp.mismatches) out << "  " << m << "\n";
  return kOk;
}

Fan disc_fan(const Options& o, const DiscInput& disc, std::string& source) {
  std::optional<Fan> given;
  if (o.builtin || o.file) {
    Input in = parse_input(o.builtin, o.file);
    given = input_fan(in);
    source = in.source;
  }
  std::optional<Fan> declared;
  if (disc.fan) {
    if (disc.fan->is_string()) {
      declared = builtin(disc.fan->get<std::string>()).fan;
      if (!given) source = "builtin:" + disc.fan->get<std::string>();
    } else {
      declared = parse_fan(*disc.fan);
      if (!given) source = "disc:" + *o.disc;
    }
  }
  if (given && declared && !(*given == *declared)) {
    throw Error(Errc::MismatchedInput, "the disc file names a different fan than " + source);
  }
  if (given) return *given;
  if (declared) return *declared;
  throw Error(Errc::MismatchedInput, "no fan: pass --builtin/--file or set \"fan\" in the disc file");
}

std::string lift_summary(const LiftComponent& c) {
  if (c.zero) return "0";
  std::ostringstream os;
  os << "alpha=" << c.alpha() << " beta=" << c.beta();
  return os.str();
}

int verb_maslov(const Options& o, std::ostream& out) {
  DiscInput disc = parse_disc(load_json_file(*o.disc));
  std::string source;
  Fan fan = disc_fan(o, disc, source);
  RealDiscLift lift = disc.lift;
  std::optional<Mobius> phi;
  if (o.mobius) {
    phi = parse_mobius(*o.mobius);
    lift = reparametrize(fan, lift, *phi);
  }
  validate_lift(fan, lift);
  InfinityStratum inf = infinity_stratum(fan, lift);
  const IndexSet i0 = lift.zero_set();
  std::optional<MaslovResult> zero_count;
  if (i0.empty() && inf.indices.empty()) zero_count = maslov_zero_count(fan, lift);
  MaslovResult general = maslov_general(fan, lift, disc.extension);
  std::optional<DoubleSymmetryReport> sym;
  try {
    sym = verify_double_symmetry(fan, lift, 32, 1);
  } catch (const Error&) {
    sym.reset();
  }

  json j = envelope("maslov", source);
  json comps = json::array();
  for (const auto& c : lift.components()) {
    if (c.zero) {
      comps.push_back({{"zero", true}});
    } else {
      comps.push_back({{"alpha", c.alpha()}, {"beta", c.beta()}});
    }
  }
  j["components"] = comps;
  if (phi) j["mobius"] = {rat_json(phi->a), rat_json(phi->b), rat_json(phi->c), rat_json(phi->d)};
  j["zero_set"] = set_json(i0);
  j["infinity_stratum"] = set_json(inf.indices);
  json ex = json::array();
  for (const auto& v : general.extension) ex.push_back(vec_json(v));
  j["extension"] = ex;
  j["mu"] = int_json(general.mu);
  j["method"] = zero_count ? "zero_count" : "general_formula";
  if (zero_count) j["mu_zero_count"] = int_json(zero_count->mu);
  if (sym) {
    j["double"] = {{"class", vec_json(sym->curve_class)},
                   {"c1", int_json(sym->c1)},
                   {"symmetric", sym->symmetric},
                   {"agrees", sym->agrees}};
  }
  if (o.json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "source: " << source << "\n";
  if (phi) out << "reparametrized by " << phi->to_string() << "\n";
  Table t({"component", "lift"});
  for (std::size_t i = 0; i < lift.size(); ++i) t.add({"w" + std::to_string(i + 1), lift_summary(lift.component(i))});
  t.print(out);
  out << "I_0 = " << divisor_list(i0) << "\n";
  out << "u(infinity) lies on " << divisor_list(inf.indices) << "\n";
  if (zero_count) {
    out << "zero count: " << zero_count->mu.get_str() << "\n";
  } else {
    std::vector<std::string> es;
    for (const auto& v : general.extension) es.push_back(to_string(v));
    out << "general formula with extension " << join(es, " ") << "\n";
  }
  if (sym) {
    out << "double: class " << to_string(sym->curve_class) << ", c1 = " << sym->c1.get_str()
        << ", conjugation symmetric: " << (sym->symmetric ? "yes" : "no") << "\n";
  }
  out << "μ = " << general.mu.get_str() << "\n";
  return kOk;
}

int verb_quantum(const Options& o, std::ostream& out) {
  Input in = parse_input(o.builtin, o.file);
  QuantumRing ring(input_fan(in));
  const HomologyRing& h = ring.classical();
  json j = envelope("quantum", in.source);
  j["minimal_chern"] = ring.chern();
  json rels = json::array();
  std::vector<std::string> rel_labels;
  for (const auto& r : ring.relations()) {
    rels.push_back({{"collection", set_json(r.collection)}, {"rhs_exponents", r.rhs_exponents}, {"q_power", r.q_power}});
    std::vector<std::string> lhs, rhs;
    for (auto i : r.collection) lhs.push_back("x" + std::to_string(i + 1));
    for (std::size_t k = 0; k < r.rhs_exponents.size(); ++k) {
      if (!r.rhs_exponents[k]) continue;
      std::string f = "x" + std::to_string(k + 1);
      if (r.rhs_exponents[k] > 1) f += "^" + std::to_string(r.rhs_exponents[k]);
      rhs.push_back(f);
    }
    std::string q = r.q_power == 1 ? "q" : "q^" + std::to_string(r.q_power);
    rel_labels.push_back(join(lhs, "*") + " = " + q + (rhs.empty() ? "" : "*" + join(rhs, "*")));
  }
  j["relations"] = rels;
  std::vector<std::string> units = {"X", "[X]", "1", in.unit_name};

  if (o.product) {
    auto factors = product_factors(o);
    QHClass prod = ring.from_classical(parse_class(h, factors[0], units));
    for (std::size_t i = 1; i < factors.size(); ++i)
      prod = ring.product(prod, ring.from_classical(parse_class(h, factors[i], units)));
    std::string value = ring.label(prod, in.unit_name);
    j["product"] = {{"factors", factors}, {"degree", prod.degree}, {"value", value}};
    if (o.json) {
      out << j.dump(2) << "\n";
    } else {
      out << join(factors, " * ") << " = " << value << "\n";
    }
    return kOk;
  }

  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t d = 0; d <= h.dim(); ++d)
    for (std::size_t k = 0; k < h.rank(2 * d); ++k) basis.emplace_back(2 * d, k);
  json table = json::array();
  Table t({"a", "b", "a * b"});
  for (std::size_t l = 0; l < basis.size(); ++l) {
    for (std::size_t r = l; r < basis.size(); ++r) {
      QHClass p = ring.product(ring.basis_class(basis[l].first, basis[l].second),
                               ring.basis_class(basis[r].first, basis[r].second));
      std::string a = ring.basis_label(basis[l].first, basis[l].second, in.unit_name);
      std::string b = ring.basis_label(basis[r].first, basis[r].second, in.unit_name);
      std::string v = ring.label(p, in.unit_name);
      table.push_back({{"a", a}, {"b", b}, {"value", v}});
      t.add({a, b, v});
    }
  }
  j["products"] = table;
  if (o.json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "source: " << in.source << "\n";
  out << "C_X = " << ring.chern() << ", |q| = " << ring.coefficients().variable_degree << "\n";
  for (const auto& r : rel_labels) out << "relation: " << r << "\n";
  t.print(out);
  return kOk;
}

int verb_real(const Options& o, std::ostream& out) {
  Input in = parse_input(o.builtin, o.file);
  Fan fan = input_fan(in);
  RealQuantumTable table = qh_real(fan, in.real_name);
  json j = envelope("real", in.source);
  j["minimal_maslov"] = table.minimal_maslov;
  json basis = json::array();
  for (const auto& b : table.basis) basis.push_back({{"degree", b.degree}, {"label", b.label}});
  j["basis"] = basis;
  json prods = json::array();
  for (const auto& p : table.products)
    prods.push_back({{"a", table.basis[p.left].label}, {"b", table.basis[p.right].label}, {"value", table.label(p.result)}});
  j["products"] = prods;
  std::optional<WidenessSummary> wide;
  if (in.polytope) {
    IntVector xi = o.xi ? parse_xi(*o.xi) : suggest_generic_xi(*in.polytope);
    wide = wideness_summary(fan, *in.polytope, xi);
    j["wideness"] = {{"betti_R", wide->betti_R},
                     {"rank_mod", wide->rank_mod},
                     {"wide", wide->wide},
                     {"bound", wide->displacement_bound}};
  }

  std::optional<std::string> product_value;
  std::vector<std::string> factors;
  if (o.product) {
    factors = product_factors(o);
    QuantumRing ring(fan);
    const HomologyRing& h = ring.classical();
    std::vector<std::string> units = {"R", "[R]", "1", in.real_name};
    QHClass prod = ring.from_classical(parse_class(h, factors[0], units));
    for (std::size_t i = 1; i < factors.size(); ++i)
      prod = ring.product(prod, ring.from_classical(parse_class(h, factors[i], units)));
    std::vector<std::pair<std::size_t, long>> value;
    for (const auto& t : prod.terms) {
      for (std::size_t b = 0; b < table.basis.size(); ++b)
        if (table.basis[b].codegree == t.codegree && table.basis[b].index == t.index) value.emplace_back(b, t.power);
    }
    std::sort(value.begin(), value.end());
    product_value = table.label(value);
    j["product"] = {{"factors", factors}, {"value", *product_value}};
  }
  if (o.json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (product_value) {
    out << join(factors, " * ") << " = " << *product_value << "\n";
    return kOk;
  }
  out << "source: " << in.source << "\n";
  out << "N_R = " << table.minimal_maslov << ", |t| = " << table.coefficients.variable_degree << "\n";
  Table bt({"degree", "class"});
  for (const auto& b : table.basis) bt.add({std::to_string(b.degree), b.label});
  bt.print(out);
  Table pt({"a", "b", "a * b"});
  for (const auto& p : table.products) pt.add({table.basis[p.left].label, table.basis[p.right].label, table.label(p.result)});
  pt.print(out);
  if (wide) {
    out << "betti_R = " << join_numbers(wide->betti_R) << "\n";
    out << "rank QH_k(R) for k mod " << table.minimal_maslov << " = " << join_numbers(wide->rank_mod) << "\n";
    out << "wide: " << (wide->wide ? "yes" : "no") << ", bound = " << wide->displacement_bound << "\n";
  }
  return kOk;
}

int verb_info(const Options& o, std::ostream& out) {
  Input in = parse_input(o.builtin, o.file);
  Fan fan = input_fan(in);
  HomologyRing h(fan);
  bool complete = true;
  Integer cx = minimal_chern(fan);
  bool fano = is_fano(fan);
  json j = envelope("info", in.source);
  j["dim"] = fan.dim();
  j["num_rays"] = fan.num_rays();
  j["minimal_chern"] = int_json(cx);
  j["fano"] = fano;
  j["complete"] = complete;
  j["fan"] = to_json(fan);
  json betti = json::array();
  for (std::size_t d = 0; d <= fan.dim(); ++d) betti.push_back(h.rank(2 * d));
  j["betti_R"] = betti;
  if (in.polytope) {
    j["polytope"] = to_json(*in.polytope);
    j["vertices"] = vertices(*in.polytope).size();
  }
  if (o.json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "source: " << in.source << "\n";
  out << "dim " << fan.dim() << ", " << fan.num_rays() << " rays, C_X = " << cx.get_str()
      << ", Fano: " << (fano ? "yes" : "no") << "\n";
  std::vector<std::size_t> b;
  for (std::size_t d = 0; d <= fan.dim(); ++d) b.push_back(h.rank(2 * d));
  out << "betti_R = " << join_numbers(b) << "\n";
  if (in.polytope) out << "vertices: " << vertices(*in.polytope).size() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"toric: invariants of toric manifolds and their real Lagrangians", "toric"};
  app.require_subcommand(1);
  Options o;
  struct Verb {
    const char* name;
    const char* help;
  };
  const Verb verbs[] = {
      {"check", "Delzant and fan certificates"},
      {"fan", "rays, cones, kernel, primitive collections, C_X"},
      {"homology", "Z2 homology ring"},
      {"morse", "critical points and Betti numbers of f_xi"},
      {"maslov", "Maslov index of a real disc"},
      {"quantum", "quantum ring of X"},
      {"real", "quantum homology of the real Lagrangian"},
      {"info", "summary of a geometry"},
  };
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    auto* b = sub->add_option("--builtin", o.builtin, "cp:n, cp1xcp1 or blowup-cp2");
    auto* f = sub->add_option("--file", o.file, "polytope or fan JSON file");
    b->excludes(f);
    sub->add_option("--xi", o.xi, "generic direction a,b,...");
    sub->add_option("--disc", o.disc, "disc JSON file");
    sub->add_option("--product", o.product, "classes C1,C2[,C3]");
    sub->add_option("--mobius", o.mobius, "reparametrisation a,b,c,d");
    sub->add_flag("--json", o.json, "machine-readable output");
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }
  CLI::App* sub = app.get_subcommands().front();
  for (auto* s : app.get_subcommands()) {
    if (s->count("--help")) {
      out << s->help();
      return kOk;
    }
  }
  const std::string verb = sub->get_name();
  if (verb == "maslov" && !o.disc) {
    err << "usage error: maslov needs --disc <path>\n";
    return kUsageError;
  }
  if (verb != "maslov" && !o.builtin && !o.file) {
    err << "usage error: " << verb << " needs --builtin <id> or --file <path>\n";
    return kUsageError;
  }
  try {
    if (verb == "check") return verb_check(o, out, err);
    if (verb == "fan") return verb_fan(o, out);
    if (verb == "homology") return verb_homology(o, out);
    if (verb == "morse") return verb_morse(o, out);
    if (verb == "maslov") return verb_maslov(o, out);
    if (verb == "quantum") return verb_quantum(o, out);
    if (verb == "real") return verb_real(o, out);
    return verb_info(o, out);
  } catch (const Error& e) {
    if (o.json) {
      json j = envelope(verb, o.builtin ? "builtin:" + *o.builtin : o.file.value_or(""));
      j["error"] = {{"name", e.name()}, {"detail", e.detail()}};
      out << j.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace toric::cli
