#include "ohpade/json_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "ohpade/errors.hpp"

namespace ohpade {

namespace {

using Kind = AnalyticFunction::Kind;

template <class T>
T get(const Json& j, const char* key, const T& fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ConfigError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

// JSON has no infinity; null stands for +inf.
Json real_or_null(double v) { return std::isinf(v) ? Json(nullptr) : Json(v); }
double real_from(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  if (!j.is_number()) throw ConfigError("expected a number or null");
  return j.get<double>();
}

Complex complex_field(const Json& j, const char* key, Complex fallback) {
  return j.contains(key) ? complex_from_json(j.at(key)) : fallback;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ConfigError("expected a complex number [re, im], got " + j.dump());
}

Json to_json(const Domain& d) {
  if (d.kind == DomainKind::unit_disk) return {{"kind", "unit_disk"}};
  return {{"kind", "interval"}, {"a", d.a}, {"b", d.b}};
}

Domain domain_from_json(const Json& j) {
  const auto kind = get<std::string>(j, "kind", "unit_disk");
  if (kind == "unit_disk") return Domain::unit_disk();
  if (kind == "interval") return Domain::interval(get(j, "a", -1.0), get(j, "b", 1.0));
  throw ConfigError("unknown domain kind '" + kind + "'");
}

Json to_json(const MeasureSpec& m) {
  Json j{{"weight", to_string(m.weight)},
         {"domain", to_json(m.domain)},
         {"oversampling", m.oversampling},
         {"quad_tol", m.quad_tol}};
  if (m.weight == WeightKind::jacobi) {
    j["alpha"] = m.alpha;
    j["beta"] = m.beta;
  }
  return j;
}

MeasureSpec measure_from_json(const Json& j) {
  MeasureSpec m;
  if (j.is_string()) {
    m.weight = weight_kind_from_string(j.get<std::string>());
    if (m.weight != WeightKind::circle_lebesgue) m.domain = Domain::interval();
  } else {
    if (!j.is_object()) throw ConfigError("measure must be an object or a weight name");
    try {
      m.weight = weight_kind_from_string(get<std::string>(j, "weight", "circle_lebesgue"));
    } catch (const ParameterError& e) {
      throw ConfigError(e.what());
    }
    if (j.contains("domain")) {
      m.domain = domain_from_json(j.at("domain"));
    } else if (m.weight != WeightKind::circle_lebesgue) {
      m.domain = Domain::interval();
    }
    m.alpha = get(j, "alpha", m.alpha);
    m.beta = get(j, "beta", m.beta);
    m.oversampling = get(j, "oversampling", m.oversampling);
    m.quad_tol = get(j, "quad_tol", m.quad_tol);
  }
  try {
    m.validate();
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  return m;
}

Json to_json(const AnalyticFunction& f) {
  const auto& n = f.node();
  switch (n.kind) {
    case Kind::pole:
      return {{"pole", {{"a", complex_to_json(n.a)}, {"order", n.order},
                        {"coeff", complex_to_json(n.coeff)}}}};
    case Kind::polynomial: {
      Json c = Json::array();
      for (const Complex v : n.poly) c.push_back(complex_to_json(v));
      return {{"polynomial", c}};
    }
    case Kind::exp:
      return {{"exp", {{"lambda", complex_to_json(n.lambda)}, {"coeff", complex_to_json(n.coeff)}}}};
    case Kind::log:
      return {{"log", {{"a", complex_to_json(n.a)}, {"coeff", complex_to_json(n.coeff)},
                       {"center", complex_to_json(n.center)}}}};
    case Kind::power:
      return {{"power", {{"a", complex_to_json(n.a)}, {"gamma", complex_to_json(n.gamma)},
                         {"coeff", complex_to_json(n.coeff)},
                         {"center", complex_to_json(n.center)}}}};
    case Kind::sum:
    case Kind::product: {
      Json c = Json::array();
      for (const auto& child : n.children) c.push_back(to_json(child));
      return {{n.kind == Kind::sum ? "sum" : "product", c}};
    }
  }
  throw Error("unreachable function kind");
}

AnalyticFunction function_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw ConfigError("function must be an object with exactly one key, got " + j.dump());
  }
  const std::string key = j.begin().key();
  const Json& body = j.begin().value();
  if (key == "pole") {
    return AnalyticFunction::pole(complex_from_json(require(body, "a")), get(body, "order", 1),
                                  complex_field(body, "coeff", 1.0));
  }
  if (key == "polynomial") {
    if (!body.is_array()) throw ConfigError("polynomial expects an array of coefficients");
    std::vector<Complex> c;
    for (const auto& v : body) c.push_back(complex_from_json(v));
    return AnalyticFunction::polynomial(std::move(c));
  }
  if (key == "exp") {
    return AnalyticFunction::exp(complex_field(body, "lambda", 1.0),
                                 complex_field(body, "coeff", 1.0));
  }
  if (key == "log") {
    return AnalyticFunction::log(complex_from_json(require(body, "a")),
                                 complex_field(body, "coeff", 1.0),
                                 complex_field(body, "center", 0.0));
  }
  if (key == "power") {
    return AnalyticFunction::power(complex_from_json(require(body, "a")),
                                   complex_from_json(require(body, "gamma")),
                                   complex_field(body, "coeff", 1.0),
                                   complex_field(body, "center", 0.0));
  }
  if (key == "sum" || key == "product") {
    if (!body.is_array() || body.empty()) throw ConfigError(key + " expects a non-empty array");
    std::vector<AnalyticFunction> terms;
    for (const auto& t : body) terms.push_back(function_from_json(t));
    return key == "sum" ? AnalyticFunction::sum(std::move(terms))
                        : AnalyticFunction::product(std::move(terms));
  }
  throw ConfigError("unknown function kind '" + key + "'");
}

Json to_json(const MultiIndex& m) { return m.m; }

MultiIndex multi_index_from_json(const Json& j) {
  MultiIndex m;
  try {
    if (j.is_string()) {
      m = MultiIndex::parse(j.get<std::string>());
    } else {
      m.m = j.get<std::vector<int>>();
    }
    m.validate();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("multi-index: ") + e.what());
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  return m;
}

Json to_json(const FunctionSystem& s) {
  Json f = Json::array();
  for (const auto& fn : s.functions) f.push_back(to_json(fn));
  return {{"functions", f}, {"m", to_json(s.multi_index)}};
}

FunctionSystem system_from_json(const Json& j) {
  FunctionSystem s;
  const Json& f = require(j, "functions");
  if (!f.is_array()) throw ConfigError("functions must be an array");
  for (const auto& fn : f) s.functions.push_back(function_from_json(fn));
  s.multi_index = multi_index_from_json(require(j, "m"));
  if (s.d() != s.multi_index.d()) {
    throw ConfigError("number of functions does not match the multi-index length");
  }
  return s;
}

Json to_json(const GroundTruth& t) {
  Json poles = Json::array();
  for (const auto& p : t.poles) {
    Json rho = Json::array();
    for (double r : p.rho_xi_t) rho.push_back(real_or_null(r));
    poles.push_back({{"xi", complex_to_json(p.xi)}, {"tau", p.tau}, {"rho", rho}});
  }
  Json rho_star = Json::array();
  for (const auto& row : t.rho_star) {
    Json r = Json::array();
    for (double v : row) r.push_back(real_or_null(v));
    rho_star.push_back(r);
  }
  return {{"poles", poles}, {"rho_star", rho_star}};
}

GroundTruth ground_truth_from_json(const Json& j) {
  GroundTruth t;
  for (const auto& p : require(j, "poles")) {
    SystemPoleSpec s;
    s.xi = complex_from_json(require(p, "xi"));
    s.tau = get(p, "tau", 1);
    for (const auto& r : require(p, "rho")) s.rho_xi_t.push_back(real_from(r));
    t.poles.push_back(s);
  }
  if (j.contains("rho_star")) {
    for (const auto& row : j.at("rho_star")) {
      std::vector<double> r;
      for (const auto& v : row) r.push_back(real_from(v));
      t.rho_star.push_back(r);
    }
  }
  return t;
}

Json to_json(const DenominatorResult& r) {
  Json q = Json::array();
  for (const Complex c : r.q) q.push_back(complex_to_json(c));
  return {{"n", r.n},
          {"q_coeffs", q},
          {"singular_values", r.singular_values},
          {"unique", r.unique},
          {"degree_deficient", r.degree_deficient},
          {"degree", r.degree},
          {"nullspace_dim", r.nullspace_dim}};
}

Json to_json(const CatalogEntry& e) {
  Json j{{"id", e.id},
         {"summary", e.summary},
         {"measure", to_json(e.measure)},
         {"system", to_json(e.system)},
         {"derivation", e.derivation}};
  if (e.truth) j["ground_truth"] = to_json(*e.truth);
  if (e.theta) j["theta"] = *e.theta;
  if (e.expect_unique) j["expect_unique"] = *e.expect_unique;
  if (e.expect_independent) j["expect_independent"] = *e.expect_independent;
  if (e.exact_from) j["exact_from"] = *e.exact_from;
  if (e.incomplete) j["incomplete"] = {{"m", e.incomplete->m}, {"m_star", e.incomplete->m_star}};
  if (e.rho0) j["rho0"] = *e.rho0;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("'" + path + "': " + e.what());
  }
}

void write_text_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + tmp.string() + "'");
    out << text;
    if (!out.flush()) throw ConfigError("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace ohpade
