#include "fman/io.hpp"

#include <map>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

namespace fman {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw InputError(InputError::Kind::validation, what);
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) invalid(where + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!ok.contains(key)) invalid(where + ": unknown key \"" + key + "\"");
}

const json& required(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) invalid(where + ": missing key \"" + key + "\"");
  return *it;
}

std::size_t read_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) invalid(where + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

// One-based index in [1, n], returned zero-based.
std::size_t read_index(const json& obj, const char* key, std::size_t n, const std::string& where) {
  const json& v = required(obj, key, where);
  if (!v.is_number_integer()) invalid(where + ": \"" + key + "\" must be an integer");
  const long long x = v.get<long long>();
  if (x < 1 || static_cast<std::size_t>(x) > n)
    invalid(where + ": \"" + key + "\" = " + std::to_string(x) + " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(x - 1);
}

Rational read_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) invalid(where + ": coefficient must be a string \"p/q\" or an integer");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception&) {
    invalid(where + ": cannot read coefficient \"" + v.get<std::string>() + "\"");
  }
}

const json& read_array(const json& obj, const char* key, const std::string& where) {
  const json& v = required(obj, key, where);
  if (!v.is_array()) invalid(where + ": \"" + key + "\" must be an array");
  return v;
}

InputOptions read_options(const json& obj, std::size_t n) {
  InputOptions opt;
  auto it = obj.find("options");
  if (it == obj.end()) return opt;
  require_keys(*it, {"degree_bound", "leaf_vars", "format"}, "options");
  if (auto d = it->find("degree_bound"); d != it->end())
    opt.degree_bound = static_cast<std::uint32_t>(read_count(*d, "options.degree_bound"));
  if (auto l = it->find("leaf_vars"); l != it->end()) {
    if (!l->is_array()) invalid("options.leaf_vars must be an array");
    std::set<std::size_t> seen;
    for (const auto& x : *l) {
      if (!x.is_number_integer() || x.get<long long>() < 1 || x.get<std::size_t>() > n)
        invalid("options.leaf_vars: entries must be variable numbers 1.." + std::to_string(n));
      if (seen.insert(x.get<std::size_t>() - 1).second) opt.leaf_vars.push_back(x.get<std::size_t>() - 1);
    }
  }
  if (auto f = it->find("format"); f != it->end()) {
    if (*f == "json") opt.format = ReportFormat::json;
    else if (*f == "md") opt.format = ReportFormat::markdown;
    else invalid("options.format must be \"json\" or \"md\"");
  }
  return opt;
}

AlgebraStructure read_algebra(const json& doc, const std::string& name) {
  require_keys(doc, {"kind", "name", "description", "dim", "bracket", "product", "options"}, "algebra");
  const std::size_t n = read_count(required(doc, "dim", "algebra"), "algebra.dim");
  AlgebraStructure a(name, n);

  // Entries are keyed by (min(i,j), max(i,j), k) so that both orders of the
  // same constant meet in one slot.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> bracket, product;

  for (const auto& e : read_array(doc, "bracket", "algebra")) {
    require_keys(e, {"i", "j", "k", "coef"}, "bracket entry");
    const std::size_t i = read_index(e, "i", n, "bracket entry");
    const std::size_t j = read_index(e, "j", n, "bracket entry");
    const std::size_t k = read_index(e, "k", n, "bracket entry");
    Rational c = read_rational(required(e, "coef", "bracket entry"), "bracket entry " + triple(i, j, k));
    if (i == j) {
      if (!c.is_zero()) invalid("bracket not antisymmetric: c^k_ii nonzero at " + triple(i, j, k));
      continue;
    }
    if (i > j) c = -c;
    auto key = std::make_tuple(std::min(i, j), std::max(i, j), k);
    auto [it, inserted] = bracket.try_emplace(key, c);
    if (!inserted && it->second != c)
      invalid("bracket not antisymmetric: conflicting entries at " + triple(i, j, k));
  }
  for (const auto& e : read_array(doc, "product", "algebra")) {
    require_keys(e, {"i", "j", "k", "coef"}, "product entry");
    const std::size_t i = read_index(e, "i", n, "product entry");
    const std::size_t j = read_index(e, "j", n, "product entry");
    const std::size_t k = read_index(e, "k", n, "product entry");
    const Rational c = read_rational(required(e, "coef", "product entry"), "product entry " + triple(i, j, k));
    auto key = std::make_tuple(std::min(i, j), std::max(i, j), k);
    auto [it, inserted] = product.try_emplace(key, c);
    if (!inserted && it->second != c)
      invalid("product not symmetric: conflicting entries at " + triple(i, j, k));
  }

  for (const auto& [key, c] : bracket) a.set_bracket(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
  for (const auto& [key, c] : product) a.set_product(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
  return a;
}

PolyFManifold read_manifold(const json& doc) {
  require_keys(doc, {"kind", "name", "description", "nvars", "S", "options"}, "poly-manifold");
  const std::size_t n = read_count(required(doc, "nvars", "poly-manifold"), "poly-manifold.nvars");
  PolyFManifold m(n);
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Polynomial> grid;

  for (const auto& e : read_array(doc, "S", "poly-manifold")) {
    require_keys(e, {"i", "j", "k", "poly"}, "S entry");
    const std::size_t i = read_index(e, "i", n, "S entry");
    const std::size_t j = read_index(e, "j", n, "S entry");
    const std::size_t k = read_index(e, "k", n, "S entry");
    const std::string where = "S entry " + triple(i, j, k);
    Polynomial p(n);
    for (const auto& term : read_array(e, "poly", where)) {
      require_keys(term, {"exps", "coef"}, where);
      const json& exps = required(term, "exps", where);
      if (!exps.is_array() || exps.size() != n)
        invalid(where + ": \"exps\" must list " + std::to_string(n) + " exponents");
      Exponents ex;
      for (const auto& x : exps) ex.push_back(static_cast<std::uint32_t>(read_count(x, where + " exponent")));
      p.add_term(ex, read_rational(required(term, "coef", where), where));
    }
    auto key = std::make_tuple(std::min(i, j), std::max(i, j), k);
    auto [it, inserted] = grid.try_emplace(key, p);
    if (!inserted && it->second != p) invalid("S not symmetric: conflicting entries at " + triple(i, j, k));
  }
  for (const auto& [key, p] : grid) m.set_s(std::get<0>(key), std::get<1>(key), std::get<2>(key), p);
  return m;
}

json rational_json(const Rational& r) { return r.str(); }

}  // namespace

InputSpec parse_input(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw InputError(InputError::Kind::parse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) invalid("top level must be an object");

  InputSpec spec;
  if (auto k = doc.find("kind"); k != doc.end()) {
    if (*k == "algebra") spec.kind = InputSpec::Kind::algebra;
    else if (*k == "poly-manifold") spec.kind = InputSpec::Kind::poly_manifold;
    else invalid("kind must be \"algebra\" or \"poly-manifold\"");
  } else if (doc.contains("dim")) {
    spec.kind = InputSpec::Kind::algebra;
  } else if (doc.contains("nvars")) {
    spec.kind = InputSpec::Kind::poly_manifold;
  } else {
    invalid("cannot tell the input kind: no \"kind\", \"dim\" or \"nvars\"");
  }
  if (auto v = doc.find("name"); v != doc.end()) {
    if (!v->is_string()) invalid("name must be a string");
    spec.name = v->get<std::string>();
  }
  if (auto v = doc.find("description"); v != doc.end()) {
    if (!v->is_string()) invalid("description must be a string");
    spec.description = v->get<std::string>();
  }

  std::size_t n = 0;
  if (spec.kind == InputSpec::Kind::algebra) {
    spec.payload = read_algebra(doc, spec.name);
    n = spec.algebra().dim();
  } else {
    spec.payload = read_manifold(doc);
    n = spec.manifold().nvars();
  }
  spec.options = read_options(doc, n);
  return spec;
}

std::string serialize_input(const InputSpec& spec) {
  json doc;
  if (!spec.name.empty()) doc["name"] = spec.name;
  if (!spec.description.empty()) doc["description"] = spec.description;

  if (spec.kind == InputSpec::Kind::algebra) {
    const AlgebraStructure& a = spec.algebra();
    const std::size_t n = a.dim();
    doc["kind"] = "algebra";
    doc["dim"] = n;
    json bracket = json::array(), product = json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (i < j && !a.bracket_constant(i, j, k).is_zero())
            bracket.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"coef", rational_json(a.bracket_constant(i, j, k))}});
          if (!a.product_constant(i, j, k).is_zero())
            product.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"coef", rational_json(a.product_constant(i, j, k))}});
        }
    doc["bracket"] = std::move(bracket);
    doc["product"] = std::move(product);
  } else {
    const PolyFManifold& m = spec.manifold();
    const std::size_t n = m.nvars();
    doc["kind"] = "poly-manifold";
    doc["nvars"] = n;
    json s = json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Polynomial& p = m.s(i, j, k);
          if (p.is_zero()) continue;
          json terms = json::array();
          for (const auto& [exps, c] : p.terms()) terms.push_back({{"exps", exps}, {"coef", rational_json(c)}});
          s.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"poly", std::move(terms)}});
        }
    doc["S"] = std::move(s);
  }

  json opt = json::object();
  if (spec.options.degree_bound) opt["degree_bound"] = *spec.options.degree_bound;
  if (!spec.options.leaf_vars.empty()) {
    json l = json::array();
    for (std::size_t v : spec.options.leaf_vars) l.push_back(v + 1);
    opt["leaf_vars"] = std::move(l);
  }
  if (spec.options.format) opt["format"] = *spec.options.format == ReportFormat::json ? "json" : "md";
  if (!opt.empty()) doc["options"] = std::move(opt);
  return doc.dump(2) + "\n";
}

}  // namespace fman
