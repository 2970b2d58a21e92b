#pragma once

#include "gct/obstructions.hpp"
#include "gct/polytope.hpp"
#include "gct/quasipolynomial.hpp"
#include "gct/symfunc.hpp"

#include <json.hpp>

#include <string>

namespace gct {

using Json = nlohmann::ordered_json;

/// Rationals are written as "p/q" or integer strings. Reading also accepts
/// JSON integers.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json quasipolynomial_to_json(const QuasiPolynomial& q);
QuasiPolynomial quasipolynomial_from_json(const Json& j);

/// {"A": [[...]], "b": [...], "c": [...]} with "c" optional.
ParamPolytope polytope_from_json(const Json& j);
Json polytope_to_json(const ParamPolytope& p);
ParamPolytope load_polytope_file(const std::string& path);

/// {"4": 1, "2,2": 1} in decreasing lexicographic partition order.
Json multiplicities_to_json(const Multiplicities& m);

Json certificate_to_json(const ObstructionCertificate& c);
ObstructionCertificate certificate_from_json(const Json& j);

/// Budgets for the expensive computations, overridable from a JSON file.
struct Budgets {
  int plethysm_degree_cap = 10;
  std::size_t weyl_dim_cap = 200;
  int character_table_cap = 14;
  int max_period = 4;
  int magic_weight_cap = 6;
};

/// Keys match the field names; unknown keys are rejected so that typos do
/// not silently fall back to defaults.
Budgets budgets_from_json(const Json& j);
Budgets load_budgets_file(const std::string& path);
Json budgets_to_json(const Budgets& b);

}  // namespace gct
