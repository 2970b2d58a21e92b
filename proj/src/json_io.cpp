#include "gct/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace gct {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational string or integer, got " + j.dump());
}

Json quasipolynomial_to_json(const QuasiPolynomial& q) {
  Json comps = Json::array();
  for (const auto& poly : q.components()) {
    Json c = Json::array();
    for (const auto& coeff : poly) c.push_back(rational_to_json(coeff));
    comps.push_back(std::move(c));
  }
  return Json{{"period", q.period()}, {"components", std::move(comps)}};
}

QuasiPolynomial quasipolynomial_from_json(const Json& j) {
  std::vector<Polynomial> comps;
  for (const auto& c : j.at("components")) {
    Polynomial p;
    for (const auto& coeff : c) p.push_back(rational_from_json(coeff));
    comps.push_back(std::move(p));
  }
  return QuasiPolynomial(j.at("period").get<int>(), std::move(comps));
}

namespace {

RationalVector vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string("polytope field ") + what + " must be an array");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

}  // namespace

ParamPolytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("b"))
    throw std::invalid_argument("polytope file needs fields \"A\" and \"b\"");
  std::vector<RationalVector> rows;
  for (const auto& row : j.at("A")) rows.push_back(vector_from_json(row, "A"));
  const RationalVector b = vector_from_json(j.at("b"), "b");
  const RationalVector c = j.contains("c") ? vector_from_json(j.at("c"), "c") : RationalVector{};
  if (rows.empty()) throw std::invalid_argument("polytope needs at least one inequality");
  for (const auto& row : rows)
    if (row.size() != rows.front().size()) throw std::invalid_argument("rows of A differ in length");
  return ParamPolytope(RationalMatrix::from_rows(rows), b, c);
}

Json polytope_to_json(const ParamPolytope& p) {
  Json a = Json::array();
  for (std::size_t r = 0; r < p.a().rows(); ++r) a.push_back(vector_to_json(p.a().row(r)));
  return Json{{"A", std::move(a)}, {"b", vector_to_json(p.b())}, {"c", vector_to_json(p.c())}};
}

ParamPolytope load_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open polytope file " + path);
  return polytope_from_json(Json::parse(in));
}

Json multiplicities_to_json(const Multiplicities& m) {
  Json out = Json::object();
  for (auto it = m.rbegin(); it != m.rend(); ++it) out[it->first.to_string()] = it->second;
  return out;
}

Json certificate_to_json(const ObstructionCertificate& c) {
  Json checks{{"even", c.checks.even}, {"alpha_neq_beta", c.checks.alpha_neq_beta}, {"invariant_dim", nullptr}};
  if (c.checks.invariant_dim) checks["invariant_dim"] = *c.checks.invariant_dim;
  return Json{{"n", c.n}, {"gamma", c.gamma.to_string()}, {"checks", std::move(checks)}, {"bitlength", c.bitlength}};
}

ObstructionCertificate certificate_from_json(const Json& j) {
  ObstructionCertificate c;
  c.n = j.at("n").get<int>();
  c.gamma = Partition::parse(j.at("gamma").get<std::string>());
  if (j.contains("checks")) {
    const auto& checks = j.at("checks");
    c.checks.even = checks.value("even", false);
    c.checks.alpha_neq_beta = checks.value("alpha_neq_beta", false);
    if (checks.contains("invariant_dim") && !checks.at("invariant_dim").is_null())
      c.checks.invariant_dim = checks.at("invariant_dim").get<std::size_t>();
  }
  c.bitlength = j.value("bitlength", std::size_t{0});
  return c;
}

Budgets budgets_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  Budgets b;
  for (const auto& [key, value] : j.items()) {
    if (key == "plethysm_degree_cap") b.plethysm_degree_cap = value.get<int>();
    else if (key == "weyl_dim_cap") b.weyl_dim_cap = value.get<std::size_t>();
    else if (key == "character_table_cap") b.character_table_cap = value.get<int>();
    else if (key == "max_period") b.max_period = value.get<int>();
    else if (key == "magic_weight_cap") b.magic_weight_cap = value.get<int>();
    else throw std::invalid_argument("unknown config key \"" + key + "\"");
  }
  return b;
}

Budgets load_budgets_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  return budgets_from_json(Json::parse(in));
}

Json budgets_to_json(const Budgets& b) {
  return Json{{"plethysm_degree_cap", b.plethysm_degree_cap},
              {"weyl_dim_cap", b.weyl_dim_cap},
              {"character_table_cap", b.character_table_cap},
              {"max_period", b.max_period},
              {"magic_weight_cap", b.magic_weight_cap}};
}

}  // namespace gct
