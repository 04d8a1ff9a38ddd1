#include "qtaft/config.hpp"

#include <nlohmann/json.hpp>

#include "qtaft/errors.hpp"

namespace qtaft {

using json = nlohmann::ordered_json;

namespace {

json cyc_to_json(const CycNum& value) {
  json coeffs = json::array();
  for (const auto& c : value.coefficients()) coeffs.push_back(rational_to_string(c));
  return json{{"order", value.order()}, {"coeffs", std::move(coeffs)}};
}

CycNum cyc_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return CycNum(j.get<long>());
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    if (const auto root = RootOfUnity::from_string(text)) return root->value();
    if (const auto q = rational_from_string(text)) return CycNum(*q);
    throw parse_error(field + ": cannot read scalar '" + text + "'");
  }
  if (j.is_object()) {
    if (!j.contains("order") || !j.contains("coeffs"))
      throw parse_error(field + ": scalar object needs 'order' and 'coeffs'");
    const long order = j.at("order").get<long>();
    if (order < 1) throw parse_error(field + ": order must be positive");
    std::vector<Rational> coeffs;
    for (const auto& entry : j.at("coeffs")) {
      const auto q = rational_from_string(entry.get<std::string>());
      if (!q) throw parse_error(field + ": bad rational '" + entry.get<std::string>() + "'");
      coeffs.push_back(*q);
    }
    if (static_cast<long>(coeffs.size()) != totient(order))
      throw parse_error(field + ": expected " + std::to_string(totient(order)) +
                        " coefficients for order " + std::to_string(order));
    return CycNum::from_coefficients(order, std::move(coeffs));
  }
  throw parse_error(field + ": unsupported scalar form");
}

std::vector<CycNum> cyc_table_from_json(const json& j, const std::string& field, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw parse_error(field + ": expected an array of " + std::to_string(n) + " scalars");
  std::vector<CycNum> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(cyc_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

json element_to_json(const FreeElement& element) {
  json terms = json::array();
  for (const auto& [word, coeff] : element.terms()) {
    terms.push_back(json{{"path", word.to_string()}, {"coeff", cyc_to_json(coeff)}});
  }
  return terms;
}

FreeElement element_from_json(const json& j, const std::string& field, int n) {
  FreeElement out(n);
  if (!j.is_array()) throw parse_error(field + ": expected an array of terms");
  for (const auto& term : j) {
    if (!term.contains("path") || !term.contains("coeff"))
      throw parse_error(field + ": each term needs 'path' and 'coeff'");
    const auto word = PathWord::from_string(n, term.at("path").get<std::string>());
    if (!word)
      throw parse_error(field + ": bad path '" + term.at("path").get<std::string>() + "'");
    out.add_term(*word, cyc_from_json(term.at("coeff"), field + ".coeff"));
  }
  return out;
}

long get_long(const json& j, const std::string& field) {
  if (!j.contains(field) || !j.at(field).is_number_integer())
    throw parse_error("missing or non-integer field '" + field + "'");
  return j.at(field).get<long>();
}

}  // namespace

std::string cyc_to_json_text(const CycNum& value) { return cyc_to_json(value).dump(); }

CycNum cyc_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad scalar JSON: ") + e.what());
  }
  return cyc_from_json(j, "scalar");
}

std::string action_spec_to_json(const ActionSpec& spec) {
  json j;
  j["n"] = spec.n;
  j["r"] = spec.taft.r;
  j["m"] = spec.taft.m;
  j["L"] = spec.field_order;
  j["kind"] = kind_to_string(spec.kind);
  j["d"] = spec.d;
  j["lambda"] = spec.taft.lambda.to_string();
  json mu = json::array(), mu_star = json::array(), gamma = json::array();
  for (const auto& v : spec.mu) mu.push_back(cyc_to_json(v));
  for (const auto& v : spec.mu_star) mu_star.push_back(cyc_to_json(v));
  for (const auto& v : spec.gamma) gamma.push_back(cyc_to_json(v));
  j["mu"] = std::move(mu);
  j["mu_star"] = std::move(mu_star);
  j["gamma"] = std::move(gamma);
  json sigma = json::array();
  for (const auto& [arrow, image] : spec.sigma.entries()) {
    sigma.push_back(
        json{{"arrow", arrow_to_string(arrow)}, {"element", element_to_json(image)}});
  }
  j["sigma"] = std::move(sigma);
  return j.dump(2);
}

ActionSpec action_spec_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad config JSON: ") + e.what());
  }

  ActionSpec spec;
  spec.n = static_cast<int>(get_long(j, "n"));
  if (spec.n < 3) throw parse_error("n: need at least 3 vertices");
  spec.taft.r = get_long(j, "r");
  spec.taft.m = get_long(j, "m");
  if (spec.taft.r <= 1) throw parse_error("r: must exceed 1");
  if (spec.taft.m % spec.taft.r != 0) throw parse_error("m: must be a multiple of r");
  spec.field_order =
      j.contains("L") ? get_long(j, "L") : default_field_order(spec.taft.m, spec.n);
  if (spec.field_order < 1 || spec.field_order % spec.taft.r != 0)
    throw parse_error("L: must be a positive multiple of r");

  if (!j.contains("kind")) throw parse_error("missing field 'kind'");
  const auto kind = kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw parse_error("kind: expected 'rotation' or 'reflection'");
  spec.kind = *kind;
  spec.d = static_cast<int>(get_long(j, "d"));
  if (spec.d < 0 || spec.d >= spec.n) throw parse_error("d: out of range");

  if (j.contains("lambda")) {
    const auto lambda = RootOfUnity::from_string(j.at("lambda").get<std::string>());
    if (!lambda) throw parse_error("lambda: expected 'zeta(L)^j'");
    spec.taft.lambda = *lambda;
  } else {
    spec.taft.lambda = RootOfUnity(spec.field_order, spec.field_order / spec.taft.r);
  }

  if (!j.contains("mu")) throw parse_error("missing field 'mu'");
  if (!j.contains("mu_star")) throw parse_error("missing field 'mu_star'");
  if (!j.contains("gamma")) throw parse_error("missing field 'gamma'");
  spec.mu = cyc_table_from_json(j.at("mu"), "mu", spec.n);
  spec.mu_star = cyc_table_from_json(j.at("mu_star"), "mu_star", spec.n);
  spec.gamma = cyc_table_from_json(j.at("gamma"), "gamma", spec.n);

  if (j.contains("sigma")) {
    if (!j.at("sigma").is_array()) throw parse_error("sigma: expected an array");
    for (const auto& entry : j.at("sigma")) {
      if (!entry.contains("arrow") || !entry.contains("element"))
        throw parse_error("sigma: each entry needs 'arrow' and 'element'");
      const std::string arrow_text = entry.at("arrow").get<std::string>();
      const auto word = PathWord::from_string(spec.n, arrow_text);
      if (!word || word->length() != 1)
        throw parse_error("sigma.arrow: bad arrow '" + arrow_text + "'");
      spec.sigma.set(word->first_arrow(),
                     element_from_json(entry.at("element"), "sigma.element", spec.n));
    }
  }
  return spec;
}

namespace {

RotationParams rotation_params_from_json(const json& j) {
  RotationParams p;
  p.n = static_cast<int>(get_long(j, "n"));
  p.r = get_long(j, "r");
  p.m = get_long(j, "m");
  p.d = static_cast<int>(get_long(j, "d"));
  if (j.contains("lambda_exponent")) p.lambda_exponent = get_long(j, "lambda_exponent");
  if (j.contains("L")) p.field_order = get_long(j, "L");
  p.gamma0 = j.contains("gamma0") ? cyc_from_json(j.at("gamma0"), "gamma0") : CycNum(0);
  if (j.contains("xi")) {
    for (size_t i = 0; i < j.at("xi").size(); ++i)
      p.xi.push_back(cyc_from_json(j.at("xi")[i], "xi[" + std::to_string(i) + "]"));
  }
  p.mu = cyc_table_from_json(j.at("mu"), "mu", p.n);
  p.mu_star = cyc_table_from_json(j.at("mu_star"), "mu_star", p.n);
  p.c = j.contains("c") ? cyc_from_json(j.at("c"), "c") : CycNum(0);
  p.c_star = j.contains("c_star") ? cyc_from_json(j.at("c_star"), "c_star") : CycNum(0);
  return p;
}

ReflectionParams reflection_params_from_json(const json& j) {
  ReflectionParams p;
  p.n = static_cast<int>(get_long(j, "n"));
  p.m = get_long(j, "m");
  p.d = static_cast<int>(get_long(j, "d"));
  if (j.contains("L")) p.field_order = get_long(j, "L");
  p.mu = cyc_table_from_json(j.at("mu"), "mu", p.n);
  p.gamma_seed =
      j.contains("gamma_seed") ? cyc_from_json(j.at("gamma_seed"), "gamma_seed") : CycNum(0);
  if (j.contains("axis_vertex_signs")) {
    for (const auto& [key, value] : j.at("axis_vertex_signs").items())
      p.axis_vertex_signs[std::stoi(key)] = value.get<int>();
  }
  if (j.contains("axis_edge_seeds")) {
    for (const auto& [key, value] : j.at("axis_edge_seeds").items())
      p.axis_edge_seeds[std::stoi(key)] =
          cyc_from_json(value, "axis_edge_seeds[" + key + "]");
  }
  return p;
}

ExceptionalParams exceptional_params_from_json(const json& j) {
  ExceptionalParams p;
  p.m = j.contains("m") ? get_long(j, "m") : 2;
  if (j.contains("L")) p.field_order = get_long(j, "L");
  p.mu = cyc_table_from_json(j.at("mu"), "mu", 4);
  p.gamma0 = j.contains("gamma0") ? cyc_from_json(j.at("gamma0"), "gamma0") : CycNum(1);
  p.c = j.contains("c") ? cyc_from_json(j.at("c"), "c") : CycNum(0);
  p.c_star = j.contains("c_star") ? cyc_from_json(j.at("c_star"), "c_star") : CycNum(0);
  return p;
}

}  // namespace

FamilyConfig family_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad family JSON: ") + e.what());
  }
  if (!j.contains("family")) throw parse_error("missing field 'family'");
  const std::string family = j.at("family").get<std::string>();
  FamilyConfig config;
  try {
    if (family == "rotation") {
      config.family = FamilyKind::rotation;
      config.rotation = rotation_params_from_json(j);
    } else if (family == "reflection") {
      config.family = FamilyKind::reflection;
      config.reflection = reflection_params_from_json(j);
    } else if (family == "exceptional") {
      config.family = FamilyKind::exceptional;
      config.exceptional = exceptional_params_from_json(j);
    } else {
      throw parse_error("family: expected 'rotation', 'reflection' or 'exceptional'");
    }
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad family config: ") + e.what());
  }
  return config;
}

std::string report_to_json(const ConstraintReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json entry;
    entry["name"] = e.name;
    entry["passed"] = e.passed;
    if (!e.passed) entry["witness"] = e.witness;
    entries.push_back(std::move(entry));
  }
  json j;
  j["all_passed"] = report.all_passed();
  j["checks"] = std::move(entries);
  return j.dump(2);
}

}  // namespace qtaft
