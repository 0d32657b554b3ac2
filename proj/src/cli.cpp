#include "tfr/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "tfr/cech.hpp"
#include "tfr/cohomology.hpp"
#include "tfr/frobenius.hpp"
#include "tfr/monoid.hpp"

namespace tfr::cli {

using nlohmann::json;
using nlohmann::ordered_json;
using moncomplex::MonoidalComplex;

namespace {

// ---- integers ----

Integer parse_integer(const ordered_json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                                           : Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size() || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError(where + ": malformed integer \"" + s + "\"");
    return Integer(s);
  }
  throw InputError(where + ": expected an integer");
}

IntVector parse_vector(const ordered_json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of integers");
  if (j.size() != dim)
    throw InputError(where + ": has length " + std::to_string(j.size()) + ", dimension is " + std::to_string(dim));
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

template <class J>
J int_json(const Integer& x) {
  if (x.fits_slong_p()) return J(x.get_si());
  return J(x.get_str());
}

json jint(const Integer& x) { return int_json<json>(x); }

json jvec(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

json jvecs(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(jvec(v));
  return a;
}

std::string where_in_text(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + " column " + std::to_string(col);
}

const ordered_json& field(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  return obj.at(key);
}

}  // namespace

// ---- documents ----

InputDocument parse_input(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InputError("malformed JSON at " + where_in_text(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!j.is_object()) throw InputError("document: expected an object");
  for (const auto& [k, v] : j.items())
    if (k != "dimension" && k != "rays" && k != "cones" && k != "monoids" && k != "options")
      throw InputError("document: unknown field \"" + k + "\"");

  InputDocument d;
  const auto& dim = field(j, "dimension", "document");
  if (!dim.is_number_unsigned() || dim.get<std::uint64_t>() == 0) throw InputError("dimension: expected a positive integer");
  d.dimension = dim.get<std::size_t>();

  const auto& rays = field(j, "rays", "document");
  if (!rays.is_object() || rays.empty()) throw InputError("rays: expected a non-empty object of named vectors");
  std::map<std::string, IntVector> by_name;
  for (const auto& [name, v] : rays.items()) {
    auto vec = parse_vector(v, d.dimension, "rays." + name);
    if (is_zero(vec)) throw InputError("rays." + name + ": zero vector");
    by_name[name] = vec;
    d.rays.emplace_back(name, std::move(vec));
  }

  const auto& cones = field(j, "cones", "document");
  if (!cones.is_array() || cones.empty()) throw InputError("cones: expected a non-empty list");
  std::set<std::string> cone_names;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string where = "cones[" + std::to_string(i) + "]";
    ConeEntry c;
    const auto& name = field(cones[i], "name", where);
    if (!name.is_string()) throw InputError(where + ".name: expected a string");
    c.name = name.get<std::string>();
    if (!cone_names.insert(c.name).second) throw InputError(where + ": duplicate cone name \"" + c.name + "\"");
    const auto& rs = field(cones[i], "rays", where);
    if (!rs.is_array() || rs.empty()) throw InputError(where + ".rays: expected a non-empty list of ray names");
    for (std::size_t k = 0; k < rs.size(); ++k) {
      if (!rs[k].is_string() || !by_name.count(rs[k].get<std::string>()))
        throw InputError(where + ".rays[" + std::to_string(k) + "]: unknown ray " + rs[k].dump());
      c.rays.push_back(rs[k].get<std::string>());
    }
    d.cones.push_back(std::move(c));
  }

  const auto& mons = field(j, "monoids", "document");
  if (!mons.is_object()) throw InputError("monoids: expected an object");
  if (mons.contains("stanley")) {
    if (mons.size() != 1 || !mons["stanley"].is_boolean() || !mons["stanley"].get<bool>())
      throw InputError("monoids: \"stanley\" must be true and stand alone");
    d.stanley = true;
  } else {
    for (const auto& [name, gens] : mons.items()) {
      const std::string where = "monoids." + name;
      if (!cone_names.count(name)) throw InputError(where + ": no cone of that name");
      if (!gens.is_array() || gens.empty()) throw InputError(where + ": expected a non-empty list of generators");
      std::vector<IntVector> vs;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::string w = where + "[" + std::to_string(k) + "]";
        if (gens[k].is_string()) {
          auto it = by_name.find(gens[k].get<std::string>());
          if (it == by_name.end()) throw InputError(w + ": unknown ray " + gens[k].dump());
          vs.push_back(it->second);
        } else {
          vs.push_back(parse_vector(gens[k], d.dimension, w));
        }
      }
      d.monoids[name] = std::move(vs);
    }
    for (const auto& c : d.cones)
      if (!d.monoids.count(c.name)) throw InputError("monoids: cone \"" + c.name + "\" has no generators");
  }

  if (j.contains("options")) {
    const auto& o = j["options"];
    if (!o.is_object()) throw InputError("options: expected an object");
    for (const auto& [k, v] : o.items()) {
      const std::string where = "options." + k;
      if (k == "seminormal_bound") d.options.seminormal_bound = parse_integer(v, where);
      else if (k == "oracle_bound") d.options.oracle_bound = parse_integer(v, where);
      else if (k == "presentation_degree") {
        if (!v.is_number_unsigned()) throw InputError(where + ": expected a non-negative integer");
        d.options.presentation_degree = v.get<std::size_t>();
      } else if (k == "box") {
        if (!v.is_number_unsigned()) throw InputError(where + ": expected a non-negative integer");
        d.options.box = v.get<long>();
      } else {
        throw InputError(where + ": unknown option");
      }
    }
  }
  return d;
}

std::string render_input(const InputDocument& d) {
  ordered_json j;
  j["dimension"] = d.dimension;
  ordered_json rays = ordered_json::object();
  for (const auto& [n, v] : d.rays) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(int_json<ordered_json>(x));
    rays[n] = a;
  }
  j["rays"] = rays;
  ordered_json cones = ordered_json::array();
  for (const auto& c : d.cones) cones.push_back({{"name", c.name}, {"rays", c.rays}});
  j["cones"] = cones;
  ordered_json mons = ordered_json::object();
  if (d.stanley) {
    mons["stanley"] = true;
  } else {
    for (const auto& c : d.cones) {
      ordered_json gens = ordered_json::array();
      for (const auto& v : d.monoids.at(c.name)) {
        ordered_json a = ordered_json::array();
        for (const auto& x : v) a.push_back(int_json<ordered_json>(x));
        gens.push_back(a);
      }
      mons[c.name] = gens;
    }
  }
  j["monoids"] = mons;
  ordered_json o = ordered_json::object();
  if (d.options.seminormal_bound) o["seminormal_bound"] = int_json<ordered_json>(*d.options.seminormal_bound);
  if (d.options.oracle_bound) o["oracle_bound"] = int_json<ordered_json>(*d.options.oracle_bound);
  if (d.options.presentation_degree) o["presentation_degree"] = *d.options.presentation_degree;
  if (d.options.box) o["box"] = *d.options.box;
  if (!o.empty()) j["options"] = o;
  return j.dump(2) + "\n";
}

namespace {

std::vector<IntVector> cone_vectors(const InputDocument& d, const ConeEntry& c) {
  std::vector<IntVector> out;
  for (const auto& r : c.rays)
    for (const auto& [n, v] : d.rays)
      if (n == r) out.push_back(v);
  return out;
}

}  // namespace

MonoidalComplex build(const InputDocument& d) {
  try {
    std::vector<polyhedral::Cone> cones;
    for (const auto& c : d.cones) cones.push_back(polyhedral::cone_build(cone_vectors(d, c)));
    const auto fan = polyhedral::fan_build(cones);
    std::map<std::size_t, std::vector<IntVector>> gens;
    for (std::size_t i = 0; i < cones.size(); ++i) {
      const std::size_t idx = *fan.find(cones[i]);
      const auto& mx = fan.maximal();
      if (std::find(mx.begin(), mx.end(), idx) == mx.end())
        throw InputError("cones[" + std::to_string(i) + "]: \"" + d.cones[i].name + "\" is a face of another cone");
      if (!d.stanley) gens[idx] = d.monoids.at(d.cones[i].name);
    }
    return moncomplex::build_complex(fan, gens, d.stanley, d.options.seminormal_bound);
  } catch (const InputError&) {
    throw;
  } catch (const monoid::BoundTooSmall&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = hex[h & 15];
  return s;
}

std::string Report::text() const { return json.dump(2) + "\n"; }

IntVector parse_degree(const std::string& s, std::size_t dim) {
  IntVector v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      v.push_back(parse_integer(ordered_json(part), "--degree"));
    } catch (const InputError&) {
      throw InputError("--degree: malformed entry \"" + part + "\"");
    }
  }
  if (v.size() != dim)
    throw InputError("--degree: has " + std::to_string(v.size()) + " entries, dimension is " + std::to_string(dim));
  return v;
}

// ---- commands ----

namespace {

// Cones are named by the input's name for maximal cones and by their ray
// names (joined with '+') otherwise; the zero cone is "0".
class Names {
 public:
  Names(const InputDocument& d, const MonoidalComplex& m) : fan_(m.fan()) {
    for (const auto& [n, v] : d.rays) ray_[primitive(v)] = n;
    for (const auto& c : d.cones) maximal_[*fan_.find(polyhedral::cone_build(cone_vectors(d, c)))] = c.name;
  }
  std::string cone(std::size_t i) const {
    if (auto it = maximal_.find(i); it != maximal_.end()) return it->second;
    if (fan_.cone(i).dim() == 0) return "0";
    std::vector<std::string> parts;
    for (const auto& r : fan_.cone(i).rays()) parts.push_back(ray(r));
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : "+") + p;
    return s;
  }
  json cones(const std::vector<std::size_t>& is) const {
    json a = json::array();
    for (auto i : is) a.push_back(cone(i));
    return a;
  }
  std::string ray(const IntVector& r) const {
    auto it = ray_.find(primitive(r));
    return it == ray_.end() ? to_string(r) : it->second;
  }

 private:
  struct Less {
    bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
  };
  const polyhedral::Fan& fan_;
  std::map<IntVector, std::string, Less> ray_;
  std::map<std::size_t, std::string> maximal_;
};

std::vector<long> chars_of(const std::string& spec, const std::vector<const CohomologyTable*>& tables) {
  if (spec == "all") {
    std::set<long> ps{0};
    for (const auto* t : tables)
      for (const auto& [p, d] : t->exceptional) ps.insert(p);
    return {ps.begin(), ps.end()};
  }
  long p = 0;
  try {
    std::size_t used = 0;
    p = std::stol(spec, &used);
    if (used != spec.size()) throw InputError("");
  } catch (...) {
    throw InputError("--char: expected 0, a prime or \"all\", got \"" + spec + "\"");
  }
  if (p != 0 && !frobenius::is_prime(p)) throw InputError("--char: " + spec + " is not prime");
  return {p};
}

json table_json(const CohomologyTable& t, const std::vector<long>& chars, bool all) {
  json dims = json::object();
  for (long p : chars) dims[std::to_string(p)] = t.dims(p);
  json j{{"dims", dims}};
  if (all) {
    json ex = json::array();
    for (const auto& [p, d] : t.exceptional) ex.push_back(p);
    j["exceptional_primes"] = ex;
  }
  if (t.oracle_computed) j["oracle_computed"] = true;
  if (t.bound_exhausted) j["bound_exhausted"] = true;
  return j;
}

struct Context {
  const InputDocument& doc;
  const CommandOptions& opts;
  const MonoidalComplex& m;
  const Names& names;
  json bounds = json::object();
  bool exhausted = false;
};

IntVector need_degree(const Context& c) {
  if (!c.opts.degree) throw InputError(c.opts.command + ": --degree is required");
  return *c.opts.degree;
}

std::optional<Integer> pick(const std::optional<Integer>& cli, const std::optional<Integer>& file) { return cli ? cli : file; }

json cmd_validate(Context& c) {
  const auto& fan = c.m.fan();
  json by_dim = json::array();
  for (std::size_t k = 0; k <= fan.dim(); ++k) by_dim.push_back(fan.cones_of_dim(k).size());
  json j{{"dimension", c.m.dim()},
         {"ambient_dimension", c.m.ambient_dim()},
         {"cones_by_dimension", by_dim},
         {"maximal_cones", c.names.cones(fan.maximal())},
         {"stanley", c.m.stanley()},
         {"seminormal", c.m.seminormal()},
         {"normal", c.m.normal_monoids()}};
  if (c.m.seminormal_witness())
    j["seminormal_witness"] = {{"cone", c.names.cone(c.m.seminormal_witness()->first)},
                               {"element", jvec(c.m.seminormal_witness()->second)}};
  return j;
}

json cmd_normalize(Context& c) {
  json out = json::object();
  for (auto i : c.m.fan().maximal()) {
    const auto& mon = c.m.monoid(i);
    const auto hb = monoid::normalization(mon);
    const auto gap = monoid::normalization_gap(mon, hb.max_parallelepiped_degree * 2);
    out[c.names.cone(i)] = {{"hilbert_basis", jvecs(hb.elements)},
                            {"grading", jvec(mon.grading())},
                            {"normal", gap.empty()},
                            {"gap_up_to_degree", jint(hb.max_parallelepiped_degree * 2)},
                            {"gap", jvecs(gap)}};
  }
  return out;
}

json cmd_seminormalize(Context& c) {
  json out = json::object();
  const auto bound = pick(c.opts.bound, c.doc.options.seminormal_bound);
  for (auto i : c.m.fan().maximal()) {
    const auto r = monoid::seminormalize(c.m.monoid(i), bound);
    json e{{"generators", jvecs(r.generators)}, {"bound", jint(r.bound)}, {"verified_bound", jint(r.verified_bound)}};
    e["witness"] = r.witness ? jvec(*r.witness) : json(nullptr);
    out[c.names.cone(i)] = e;
  }
  const auto sn = moncomplex::seminormalize_complex(c.m, bound);
  c.bounds["seminormal"] = bound ? jint(*bound) : json("default");
  return {{"cones", out}, {"complex_seminormal", sn.seminormal()}};
}

json cmd_check(Context& c) {
  json out = json::object();
  const auto bound = pick(c.opts.bound, c.doc.options.seminormal_bound);
  for (auto i : c.m.fan().maximal()) {
    const auto r = monoid::check_seminormal_normal(c.m.monoid(i), bound);
    json e{{"seminormal", r.seminormal}, {"normal", r.normal}, {"verified_bound", jint(r.verified_bound)}};
    if (r.normal_witness) e["normal_witness"] = jvec(*r.normal_witness);
    if (r.seminormal_witness) e["seminormal_witness"] = jvec(*r.seminormal_witness);
    if (r.definition_witness) e["definition_witness"] = jvec(*r.definition_witness);
    out[c.names.cone(i)] = e;
  }
  c.bounds["seminormal"] = bound ? jint(*bound) : json("default");
  return {{"cones", out}, {"seminormal", c.m.seminormal()}, {"normal", c.m.normal_monoids()}};
}

std::string monomial(const moncomplex::Exponents& e, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

json cmd_presentation(Context& c) {
  std::size_t deg = 6;
  if (c.doc.options.presentation_degree) deg = *c.doc.options.presentation_degree;
  if (c.opts.bound) {
    if (*c.opts.bound < 0 || !c.opts.bound->fits_ulong_p()) throw InputError("--bound: out of range");
    deg = c.opts.bound->get_ui();
  }
  const auto p = moncomplex::presentation(c.m, deg);
  c.bounds["presentation_degree"] = deg;
  // a variable takes the name of an input vector equal to its degree
  std::vector<std::string> names;
  json vars = json::array();
  for (std::size_t i = 0; i < p.variables.size(); ++i) {
    std::string n = "X" + std::to_string(i + 1);
    for (const auto& [rn, rv] : c.doc.rays)
      if (rv == p.variables[i]) {
        n = rn;
        break;
      }
    names.push_back(n);
    vars.push_back({{"name", n}, {"degree", jvec(p.variables[i])}});
  }
  json gens = json::array();
  for (const auto& [a, b] : p.binomials) gens.push_back(monomial(a, names) + " - " + monomial(b, names));
  for (const auto& a : p.monomials) gens.push_back(monomial(a, names));
  json bins = json::array();
  for (const auto& [a, b] : p.binomials) bins.push_back({a, b});
  return {{"variables", vars},
          {"generators", gens},
          {"binomials", bins},
          {"monomials", p.monomials},
          {"verified", p.verified},
          {"monomials_checked", p.monomials_checked}};
}

json cmd_cohomology(Context& c) {
  const auto oracle = pick(c.opts.bound, c.doc.options.oracle_bound);
  const bool all = c.opts.characteristic == "all";
  if (c.opts.report == c.opts.degree.has_value()) throw InputError("cohomology: give exactly one of --degree and --report");
  if (c.opts.degree) {
    const IntVector a = *c.opts.degree;
    const auto st = cohomology::star(c.m, negate(a));
    auto total = cohomology::local_cohomology_degree(c.m, a, oracle);
    auto star_part = cohomology::star_cohomology(c.m, st);
    star_part.resize(c.m.dim());
    const auto chars = chars_of(c.opts.characteristic, {&total, &star_part});
    json j{{"degree", jvec(a)}, {"star", c.names.cones(st)}, {"cohomology", table_json(total, chars, all)},
           {"star_part", table_json(star_part, chars, all)}};
    if (!c.m.seminormal()) {
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < c.m.fan().size(); ++i)
        if (!std::binary_search(st.begin(), st.end(), i)) rest.push_back(i);
      j["restricted_to"] = c.names.cones(rest);
      if (!rest.empty()) {
        const auto sub = moncomplex::restrict(c.m, polyhedral::subfan(c.m.fan(), rest));
        auto r = cohomology::local_cohomology_degree(sub, a, oracle);
        r.resize(c.m.dim());
        j["restricted_part"] = table_json(r, chars, all);
      }
    }
    c.exhausted = total.bound_exhausted;
    c.bounds["oracle"] = oracle ? jint(*oracle) : jint(cech::default_bound(c.m));
    return j;
  }
  if (!c.m.seminormal()) throw InputError("cohomology --report: the complex is not seminormal; use --degree");
  const auto rep = cohomology::cohomology_report(c.m);
  std::vector<const CohomologyTable*> ts;
  for (const auto& e : rep) ts.push_back(&e.table);
  const auto chars = chars_of(c.opts.characteristic, ts);
  json classes = json::array();
  for (const auto& e : rep) {
    json k{{"exterior", e.star_class.exterior}, {"star", c.names.cones(e.star_class.star)},
           {"cohomology", table_json(e.table, chars, all)}};
    if (!e.star_class.exterior) {
      k["carrier"] = c.names.cone(e.star_class.carrier);
      k["representative"] = jvec(e.star_class.representative);
      k["classes_in_carrier"] = jint(e.star_class.class_count);
      k["class_lattice"] = jvecs(e.star_class.class_lattice.basis());
    }
    classes.push_back(k);
  }
  json j{{"classes", classes}, {"note", "H^i_m(R)_a is the class table of -a"}};
  const long box = c.opts.box ? *c.opts.box : c.doc.options.box.value_or(0);
  if (box > 0) {
    // cross-check every degree of the box against the Čech complex
    std::size_t degrees = 0, mismatches = 0;
    const std::size_t d = c.m.ambient_dim();
    IntVector a(d, Integer(-box));
    const auto cls = cohomology::star_classes(c.m);
    while (true) {
      const auto& t = rep[cohomology::classify(c.m, cls, negate(a))].table;
      const auto o = cech::cech_degree(c.m, a, oracle).table;
      ++degrees;
      for (long p : chars)
        if (t.dims(p) != o.dims(p)) ++mismatches;
      std::size_t i = 0;
      while (i < d && a[i] == box) a[i++] = -box;
      if (i == d) break;
      a[i] += 1;
    }
    j["scan"] = {{"radius", box}, {"degrees", degrees}, {"mismatches", mismatches}};
    c.bounds["box"] = box;
  }
  return j;
}

json cmd_depth(Context& c) {
  if (!c.m.seminormal()) throw InputError("depth: the complex is not seminormal");
  std::vector<long> chars;
  if (c.opts.characteristic == "all") {
    const auto rep = cohomology::cohomology_report(c.m);
    std::vector<const CohomologyTable*> ts;
    for (const auto& e : rep) ts.push_back(&e.table);
    chars = chars_of("all", ts);
  } else {
    chars = chars_of(c.opts.characteristic, {});
  }
  json out = json::object();
  for (long p : chars) {
    const auto r = cohomology::depth(c.m, p);
    out[std::to_string(p)] = {{"depth", r.depth}, {"dimension", r.dim}, {"cohen_macaulay", r.cohen_macaulay},
                              {"m_k", r.m_k}, {"skeleton_cm", r.skeleton_cm}};
  }
  return {{"by_characteristic", out}};
}

json cmd_fpure(Context& c) {
  if (!c.m.seminormal()) throw InputError("fpure: the complex is not seminormal, so it is F-pure in no characteristic");
  const auto r = frobenius::excluded_primes(c.m);
  json ex = json::array();
  for (const auto& [p, ws] : r.excluded) {
    json wj = json::array();
    for (const auto& w : ws)
      wj.push_back({{"maximal_cone", c.names.cone(w.maximal_cone)}, {"face", c.names.cone(w.face)},
                    {"divisor", jint(w.divisor)}, {"element", jvec(w.element)}});
    ex.push_back({{"prime", p}, {"witnesses", wj}});
  }
  const auto wf = frobenius::weak_F_regular(c.m);
  json w{{"possible", wf.possible}, {"reason", wf.reason}};
  if (wf.witness) w["witness"] = jvec(*wf.witness);
  return {{"excluded_primes", r.excluded_primes()}, {"witnesses", ex}, {"weakly_F_regular", w},
          {"note", "F-pure and F-split exactly at primes not listed"}};
}

json cmd_oracle(Context& c) {
  const IntVector a = need_degree(c);
  const auto bound = pick(c.opts.bound, c.doc.options.oracle_bound);
  const auto r = cech::cech_degree(c.m, a, bound);
  const auto chars = chars_of(c.opts.characteristic, {&r.table});
  json pieces = json::array();
  for (const auto& p : r.slice.pieces) {
    json e{{"cone", c.names.cone(p.cone)}, {"nonzero", p.nonzero}};
    if (p.nonzero) {
      e["refuge"] = c.names.cone(p.refuge);
      if (p.z) e["z"] = jvec(*p.z);
      if (p.y) e["y"] = jvec(*p.y);
    }
    pieces.push_back(e);
  }
  c.exhausted = r.slice.status == cech::Status::bound_exhausted;
  c.bounds["oracle"] = jint(r.slice.bound);
  return {{"degree", jvec(a)}, {"cohomology", table_json(r.table, chars, c.opts.characteristic == "all")}, {"pieces", pieces}};
}

json cmd_frobenius(Context& c) {
  const IntVector a = need_degree(c);
  if (!c.opts.prime) throw InputError("frobenius: -p is required");
  if (!frobenius::is_prime(*c.opts.prime)) throw InputError("-p: " + std::to_string(*c.opts.prime) + " is not prime");
  const auto bound = pick(c.opts.bound, c.doc.options.oracle_bound);
  const auto r = cech::frobenius_check(c.m, a, *c.opts.prime, bound);
  json per = json::array();
  for (const auto& d : r.per_degree)
    per.push_back({{"source_dim", d.source_dim}, {"target_dim", d.target_dim}, {"rank", d.rank},
                   {"injective", d.injective}, {"bijective", d.bijective}});
  c.exhausted = r.status == cech::Status::bound_exhausted;
  c.bounds["oracle"] = bound ? jint(*bound) : jint(cech::default_bound(c.m));
  return {{"degree", jvec(a)}, {"prime", r.prime}, {"target_degree", jvec(scale(Integer(r.prime), a))}, {"per_i", per}};
}

}  // namespace

Report run_command(const InputDocument& doc, const CommandOptions& opts) {
  static const std::map<std::string, json (*)(Context&)> commands{
      {"validate", cmd_validate}, {"normalize", cmd_normalize}, {"seminormalize", cmd_seminormalize},
      {"check", cmd_check},       {"presentation", cmd_presentation}, {"cohomology", cmd_cohomology},
      {"depth", cmd_depth},       {"fpure", cmd_fpure},         {"oracle", cmd_oracle},
      {"frobenius", cmd_frobenius}};
  auto it = commands.find(opts.command);
  if (it == commands.end()) throw InputError("unknown command \"" + opts.command + "\"");
  if (opts.degree && opts.degree->size() != doc.dimension) throw InputError("--degree: wrong dimension");

  Report rep;
  json& j = rep.json;
  json echo{{"name", opts.command}, {"char", opts.characteristic}};
  if (opts.degree) echo["degree"] = jvec(*opts.degree);
  if (opts.report) echo["report"] = true;
  if (opts.prime) echo["prime"] = *opts.prime;
  if (opts.box) echo["box"] = *opts.box;
  if (opts.bound) echo["bound"] = jint(*opts.bound);
  j["command"] = echo;
  j["input_hash"] = fnv1a(render_input(doc));
  j["version"] = kVersion;
  try {
    const auto m = build(doc);
    const Names names(doc, m);
    Context c{doc, opts, m, names};
    j["result"] = it->second(c);
    j["bounds"] = c.bounds;
    j["status"] = c.exhausted ? "bound_exhausted" : "complete";
    rep.exit_code = c.exhausted ? 2 : 0;
  } catch (const monoid::BoundTooSmall& e) {
    j["result"] = {{"error", e.what()}, {"element", jvec(e.element)}};
    j["bounds"] = json::object();
    j["status"] = "bound_exhausted";
    rep.exit_code = 2;
  }
  return rep;
}

}  // namespace tfr::cli
