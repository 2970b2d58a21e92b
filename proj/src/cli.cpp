#include "gct/cli.hpp"

#include "gct/acceptance.hpp"
#include "gct/json_io.hpp"
#include "gct/kronecker.hpp"
#include "gct/lr.hpp"
#include "gct/obstructions.hpp"
#include "gct/weylmod.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

#ifndef GCT_VERSION
#define GCT_VERSION "0.0.0"
#endif

namespace gct::cli {

const char* version() { return GCT_VERSION; }

namespace {

// Malformed command line values, reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition partition_arg(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Json stretch_json(const std::vector<std::uint64_t>& values, const std::optional<QuasiPolynomial>& fit) {
  Json out{{"values", values}, {"fit", nullptr}};
  if (fit) out["fit"] = quasipolynomial_to_json(*fit);
  return out;
}

Json symmetry_json(const SymmetryCharacterization& s) {
  return Json{{"dimension", s.dimension}, {"spans_reference", s.spans_reference},
              {"ambient_dimension", s.ambient_dimension}};
}

FormKind form_kind(const std::string& s) {
  if (s == "det") return FormKind::determinant;
  if (s == "perm") return FormKind::permanent;
  throw UsageError("form must be det or perm");
}

std::vector<ObstructionCertificate> read_certificates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open certificate file " + path);
  const Json doc = Json::parse(in);
  const Json* list = &doc;
  if (doc.is_object() && doc.contains("payload")) list = &doc.at("payload");
  if (list->is_object() && list->contains("certificates")) list = &list->at("certificates");
  std::vector<ObstructionCertificate> out;
  if (list->is_array()) {
    for (const auto& c : *list) out.push_back(certificate_from_json(c));
  } else {
    out.push_back(certificate_from_json(*list));
  }
  return out;
}

struct Context {
  Budgets budgets;
  std::string config_path;
  std::optional<int> max_period;
  int holdout = 2;
  bool full = false;

  FitOptions fit() const {
    FitOptions f;
    f.max_period = max_period.value_or(budgets.max_period);
    f.holdout = holdout;
    return f;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Littlewood-Richardson, plethysm and Kronecker coefficients, "
               "Weyl modules and permanent/determinant invariants.",
               "gct"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  Context ctx;
  bool json_flag = true;
  app.add_flag("--json", json_flag, "Emit JSON (the only output format)");
  app.add_option("--config", ctx.config_path, "JSON file with computation budgets")->check(CLI::ExistingFile);

  std::function<Json()> action;
  auto fit_flags = [&ctx](CLI::App* sub) {
    sub->add_option("--max-period", ctx.max_period, "Largest quasi-polynomial period to try")
        ->check(CLI::PositiveNumber);
    sub->add_option("--holdout", ctx.holdout, "Values reserved for verifying the fit")->check(CLI::NonNegativeNumber);
  };

  // lr
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  lr->require_subcommand(1);
  std::string a_txt, b_txt, l_txt;
  int k = 7;
  auto lr_args = [&](CLI::App* sub) {
    sub->add_option("alpha", a_txt)->required();
    sub->add_option("beta", b_txt)->required();
    sub->add_option("lambda", l_txt)->required();
  };
  auto query = [&] { return LRQuery{partition_arg(a_txt), partition_arg(b_txt), partition_arg(l_txt)}; };
  auto* lr_coeff = lr->add_subcommand("coeff", "Coefficient by the tableau rule and by hive counting");
  lr_args(lr_coeff);
  lr_coeff->callback([&] {
    action = [&] {
      const auto c = lr_coefficient_detail(query());
      return Json{{"tableau", c.tableau}, {"hive", c.hive}, {"agree", c.tableau == c.hive}};
    };
  });
  auto* lr_pos = lr->add_subcommand("positive", "Nonvanishing via hive LP feasibility");
  lr_args(lr_pos);
  lr_pos->callback([&] { action = [&] { return Json{{"positive", lr_positive(query())}}; }; });
  auto* lr_str = lr->add_subcommand("stretch", "Stretched coefficients for k = 1..K with a quasi-polynomial fit");
  lr_args(lr_str);
  lr_str->add_option("--k", k, "Largest stretch factor")->check(CLI::Range(4, 64));
  fit_flags(lr_str);
  lr_str->callback([&] {
    action = [&] {
      const auto s = lr_stretch(query(), k, ctx.fit());
      return stretch_json(s.values, s.fit);
    };
  });

  // symfunc
  auto* sf = app.add_subcommand("symfunc", "Schur expansions of products and plethysms");
  sf->require_subcommand(1);
  auto* sf_prod = sf->add_subcommand("product", "s_alpha * s_beta in the Schur basis");
  sf_prod->add_option("alpha", a_txt)->required();
  sf_prod->add_option("beta", b_txt)->required();
  sf_prod->callback([&] {
    action = [&] {
      return Json{{"expansion", multiplicities_to_json(product_expand(partition_arg(a_txt), partition_arg(b_txt)))}};
    };
  });
  auto* sf_pl = sf->add_subcommand("plethysm", "s_pi[s_mu] in the Schur basis");
  sf_pl->add_option("pi", a_txt)->required();
  sf_pl->add_option("mu", b_txt)->required();
  sf_pl->callback([&] {
    action = [&] {
      const auto m = plethysm_expand(partition_arg(a_txt), partition_arg(b_txt), ctx.budgets.plethysm_degree_cap);
      return Json{{"expansion", multiplicities_to_json(m)}};
    };
  });

  // ehrhart
  auto* eh = app.add_subcommand("ehrhart", "Integer points in dilates of a parametrized polytope");
  std::string polytope_path;
  bool series = false;
  int eh_k = 1;
  eh->add_option("--polytope", polytope_path, "Polytope JSON file")->required()->check(CLI::ExistingFile);
  eh->add_option("--k", eh_k, "Dilation factor (largest factor with --series)")->check(CLI::NonNegativeNumber);
  eh->add_flag("--series", series, "Count for k = 1..K and fit a quasi-polynomial");
  fit_flags(eh);
  eh->callback([&] {
    action = [&] {
      const auto p = load_polytope_file(polytope_path);
      if (!series) return Json{{"k", eh_k}, {"count", count_integer_points(p.at(eh_k))}};
      const auto counts = ehrhart_counts(p, eh_k);
      std::optional<QuasiPolynomial> fit;
      try {
        fit = fit_quasipolynomial(counts, ctx.fit());
      } catch (const std::domain_error&) {
      }
      return stretch_json(counts, fit);
    };
  });

  // kron
  auto* kr = app.add_subcommand("kron", "Kronecker coefficients and determinant-stabilizer invariants");
  std::string n_txt;
  int m = 2;
  kr->add_option("lambda", a_txt);
  kr->add_option("mu", b_txt);
  kr->add_option("nu", n_txt);
  kr->callback([&] {
    if (!kr->get_subcommands().empty()) return;
    if (a_txt.empty() || b_txt.empty() || n_txt.empty()) throw CLI::ValidationError("kron needs lambda mu nu");
    action = [&] {
      return Json{{"kronecker", kronecker(partition_arg(a_txt), partition_arg(b_txt), partition_arg(n_txt))}};
    };
  });
  auto* kr_det = kr->add_subcommand("det-invariant", "Invariants of SL_m x SL_m in V_lambda(GL_{m^2})");
  kr_det->add_option("lambda", l_txt)->required();
  kr_det->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  kr_det->callback([&] {
    action = [&] {
      return Json{{"multiplicity", det_stabilizer_invariant_mult(partition_arg(l_txt), m, ctx.budgets.character_table_cap)}};
    };
  });
  auto* kr_g = kr->add_subcommand("g-stretch", "Stretched determinant-stabilizer multiplicities");
  kr_g->add_option("lambda", l_txt)->required();
  kr_g->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  kr_g->add_option("--k", k, "Largest stretch factor")->check(CLI::PositiveNumber);
  fit_flags(kr_g);
  kr_g->callback([&] {
    action = [&] {
      const auto s = g_stretch(partition_arg(l_txt), m, k, ctx.budgets.character_table_cap, ctx.fit());
      return stretch_json(s.values, s.fit);
    };
  });

  // weyl
  auto* wy = app.add_subcommand("weyl", "Explicit Weyl modules and permanent-stabilizer invariants");
  wy->require_subcommand(1);
  int n = 2;
  bool with_basis = false;
  auto* wy_dim = wy->add_subcommand("dim", "Dimension of V_lambda(GL_n)");
  wy_dim->add_option("lambda", l_txt)->required();
  wy_dim->add_option("n", n)->required()->check(CLI::PositiveNumber);
  wy_dim->add_flag("--basis", with_basis, "Also list the Deruyts basis polynomials");
  wy_dim->callback([&] {
    action = [&] {
      const Partition lam = partition_arg(l_txt);
      Json outj{{"dimension", dim_weyl(lam, n)}};
      if (with_basis) {
        const WeylModuleModel mod(lam, n, ctx.budgets.weyl_dim_cap);
        Json basis = Json::array();
        for (const auto& b : mod.basis())
          basis.push_back(Json{{"tableau", b.tableau.to_string()},
                               {"poly", b.poly.to_string(matrix_var_names(static_cast<std::size_t>(n)))}});
        outj["basis"] = std::move(basis);
        outj["highest_weight_index"] = highest_weight_vector(mod);
      }
      return outj;
    };
  });
  auto* wy_inv = wy->add_subcommand("invariants", "Permutation-stabilizer invariants in V_gamma, weight (2,...,2)");
  wy_inv->add_option("--gamma", l_txt)->required();
  wy_inv->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  wy_inv->callback([&] {
    action = [&] {
      const Partition gamma = partition_arg(l_txt);
      return Json{{"gamma", gamma.to_string()},
                  {"n", n},
                  {"dimension", perm_stabilizer_invariants(gamma, n, ctx.budgets.weyl_dim_cap)},
                  {"even", is_even(gamma)}};
    };
  });
  std::string form;
  int size = 2;
  auto symcheck_args = [&](CLI::App* sub) {
    sub->add_option("form", form, "det or perm")->required();
    sub->add_option("--size", size)->required()->check(CLI::PositiveNumber);
  };
  auto* wy_sym = wy->add_subcommand("symcheck", "Forms sharing the symmetries of det or perm");
  symcheck_args(wy_sym);
  wy_sym->callback([&] { action = [&] { return symmetry_json(symmetry_characterization(form_kind(form), size)); }; });
  auto* wy_k = wy->add_subcommand("kempf", "Irreducibility criterion for C^n (x) C^n");
  wy_k->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  wy_k->callback([&] {
    action = [&] {
      const auto v = kempf_irreducibility_check(n);
      return Json{{"stable", v.stable},
                  {"degenerate", v.degenerate},
                  {"distinct_characters", v.distinct_characters},
                  {"transitive", v.transitive}};
    };
  });

  // obstruct
  auto* ob = app.add_subcommand("obstruct", "Obstruction certificates 1 (x) V_gamma");
  ob->require_subcommand(1);
  int max_n = 4;
  std::string cert_path;
  auto* ob_emit = ob->add_subcommand("emit", "Certificates for gamma = (2n), n = 2..N");
  ob_emit->add_option("--max", max_n)->required()->check(CLI::Range(2, 1000000));
  ob_emit->add_flag("--full", ctx.full, "Compute invariant multiplicities for n <= 3");
  ob_emit->callback([&] {
    action = [&] {
      Json certs = Json::array();
      for (const auto& c : emit_obstruction_family(max_n, ctx.full)) certs.push_back(certificate_to_json(c));
      return Json{{"certificates", std::move(certs)}};
    };
  });
  auto* ob_ver = ob->add_subcommand("verify", "Re-verify certificates from a file");
  ob_ver->add_option("file", cert_path)->required()->check(CLI::ExistingFile);
  ob_ver->add_flag("--full", ctx.full, "Compute invariant multiplicities for n <= 3");
  ob_ver->callback([&] {
    action = [&] {
      Json certs = Json::array();
      for (auto& c : read_certificates(cert_path)) certs.push_back(certificate_to_json(verify_obstruction(c, ctx.full)));
      return Json{{"certificates", std::move(certs)}};
    };
  });

  // magic
  auto* mg = app.add_subcommand("magic", "Magic squares and the basic permanent-like invariants");
  int r = 1;
  bool list = false;
  mg->add_option("--n", n)->required()->check(CLI::Range(1, 4));
  mg->add_option("--r", r)->required()->check(CLI::NonNegativeNumber);
  mg->add_flag("--list", list, "Include every square, not only orbit representatives");
  mg->callback([&] {
    action = [&] {
      const auto e = enumerate_magic_squares(n, r, ctx.budgets.magic_weight_cap);
      Json reps = Json::array();
      for (const auto& sq : e.orbit_representatives)
        reps.push_back(Json{{"entries", sq.entries()},
                            {"invariant", basic_invariant_poly(sq).to_string(matrix_var_names(sq.n(), 'x'))}});
      Json outj{{"count", e.squares.size()}, {"orbits", e.orbit_count()}, {"representatives", std::move(reps)}};
      if (list) {
        Json all = Json::array();
        for (const auto& sq : e.squares) all.push_back(sq.entries());
        outj["squares"] = std::move(all);
      }
      if (n <= 3) {
        const auto rep = invariant_dimension_report(n, r);
        outj["invariant_space_dim"] = rep.fixed_space_dim;
        outj["basic_invariant_rank"] = rep.basic_invariant_rank;
      }
      return outj;
    };
  });

  // symcheck
  auto* sc = app.add_subcommand("symcheck", "Symmetry verification for det, perm and trace powers");
  sc->require_subcommand(1);
  auto* sc_det = sc->add_subcommand("det", "Forms with the symmetries of det");
  sc_det->add_option("--size", size)->required()->check(CLI::PositiveNumber);
  sc_det->callback([&] { action = [&] { return symmetry_json(symmetry_characterization(FormKind::determinant, size)); }; });
  auto* sc_perm = sc->add_subcommand("perm", "Forms with the symmetries of perm");
  sc_perm->add_option("--size", size)->required()->check(CLI::PositiveNumber);
  sc_perm->callback([&] { action = [&] { return symmetry_json(symmetry_characterization(FormKind::permanent, size)); }; });
  auto* sc_tr = sc->add_subcommand("trace", "trace(X^j) under conjugation by random invertible matrices");
  int power = 2, trials = 5;
  sc_tr->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  sc_tr->add_option("--power", power)->required()->check(CLI::NonNegativeNumber);
  sc_tr->add_option("--trials", trials)->check(CLI::PositiveNumber);
  sc_tr->callback([&] { action = [&] { return Json{{"invariant", trace_like_invariance_check(n, power, trials)}}; }; });

  // accept
  bool accept_failed = false;
  auto* ac = app.add_subcommand("accept", "Run the acceptance suite and print a pass/fail manifest");
  ac->callback([&] {
    action = [&] {
      Json rows = Json::array();
      bool all = true;
      for (const auto& c : run_acceptance()) {
        all = all && c.passed;
        rows.push_back(Json{{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
      }
      accept_failed = !all;
      return Json{{"criteria", std::move(rows)}, {"all_passed", all}};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return usage_error;
  }

  std::string echo;
  for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;
  Json doc{{"command", echo}};
  const auto start = std::chrono::steady_clock::now();
  int code = ok;
  try {
    if (!ctx.config_path.empty()) ctx.budgets = load_budgets_file(ctx.config_path);
    doc["payload"] = action();
    if (accept_failed) code = domain_failure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return usage_error;
  } catch (const std::exception& e) {
    // Precondition violations and failed checks from the library are domain
    // errors; anything else indicates an internal inconsistency.
    const bool domain = dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
                        dynamic_cast<const std::out_of_range*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e);
    doc["error"] = Json{{"type", domain ? "domain_error" : "internal_error"}, {"message", e.what()}};
    code = domain_failure;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  doc["wall_time_ms"] = std::round(ms * 1000.0) / 1000.0;
  doc["version"] = version();
  out << doc.dump(2) << "\n";
  return code;
}

}  // namespace gct::cli
