#include "gct/acceptance.hpp"

#include "gct/cli.hpp"
#include "gct/json_io.hpp"
#include "gct/kronecker.hpp"
#include "gct/lr.hpp"
#include "gct/obstructions.hpp"
#include "gct/polytope.hpp"
#include "gct/weylmod.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gct {

namespace {

// Collects the first failure; later failures only bump the count.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_failure_.empty()) first_failure_ = what;
  }
  bool passed() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary(const std::string& success) const {
    if (passed()) return success + " (" + std::to_string(checks_) + " checks)";
    return std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed; first: " + first_failure_;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int s = 0; s <= max_size; ++s)
    for (auto& p : partitions_of(s)) out.push_back(p);
  return out;
}

std::string q_str(const LRQuery& q) {
  return "(" + q.alpha.to_string() + "|" + q.beta.to_string() + "|" + q.lambda.to_string() + ")";
}

std::string lr_triangle(Checker& c) {
  const auto small = partitions_up_to(4);
  for (const auto& a : small)
    for (const auto& b : small) {
      const auto product = product_expand(a, b);
      for (const auto& lam : partitions_of(a.size() + b.size(), 4)) {
        const LRQuery q{a, b, lam};
        const auto it = product.find(lam);
        const std::uint64_t schur = it == product.end() ? 0 : it->second;
        try {
          const auto d = lr_coefficient_detail(q);
          c.expect(d.tableau == schur && d.hive == schur,
                   q_str(q) + ": tableau " + std::to_string(d.tableau) + ", hive " + std::to_string(d.hive) +
                       ", schur " + std::to_string(schur));
        } catch (const std::logic_error& e) {
          c.expect(false, q_str(q) + ": " + e.what());
        }
      }
    }
  return c.summary("tableau = hive = Schur product on all triples with |alpha|,|beta| <= 4");
}

std::string saturation(Checker& c) {
  const auto small = partitions_up_to(4);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& lam : partitions_of(a.size() + b.size(), 4)) {
        const LRQuery q{a, b, lam};
        const bool lp = lr_positive(q);
        const bool one = lr_coefficient(q) > 0;
        const bool two = lr_coefficient(q.scaled(2)) > 0;
        c.expect(lp == one && one == two, q_str(q) + ": lp " + std::to_string(lp) + ", c>0 " + std::to_string(one) +
                                              ", c(2q)>0 " + std::to_string(two));
      }
  return c.summary("LP feasibility, c > 0 and c(2q) > 0 agree");
}

std::string stretching(Checker& c) {
  const std::vector<std::array<const char*, 3>> queries = {
      {"2,1", "2,1", "3,2,1"},         {"1", "1", "2"},
      {"2,1", "2,1", "4,2"},           {"3,1", "2,1", "4,2,1"},
      {"2,1,1", "2,1", "3,2,1,1"},     {"2,2,1", "2,1,1", "3,3,2,1"},
      {"3,2,1", "3,2,1", "4,3,3,2"},   {"3,2,1", "3,2,1", "5,4,2,1"},
      {"4,2,1", "3,2,1", "5,3,3,1,1"}, {"3,2,1", "3,2,1", "4,3,2,2,1"}};
  FitOptions options;
  options.max_period = 4;
  options.max_degree = 6;
  options.holdout = 2;
  int max_degree_seen = 0;
  for (const auto& [a, b, l] : queries) {
    const LRQuery q{Partition::parse(a), Partition::parse(b), Partition::parse(l)};
    const auto s = lr_stretch(q, 7, options);
    const auto product = product_expand(q.alpha, q.beta);
    const auto it = product.find(q.lambda);
    c.expect(s.values.size() == 7 && s.values[0] == (it == product.end() ? 0 : it->second),
             q_str(q) + ": k=1 value disagrees with the Schur product");
    c.expect(s.fit.has_value(), q_str(q) + ": no quasi-polynomial fit");
    if (!s.fit) continue;
    max_degree_seen = std::max(max_degree_seen, s.fit->degree());
    c.expect(s.fit->period() <= 4 && s.fit->degree() <= 6, q_str(q) + ": fit outside period/degree bounds");
    for (int k = 1; k <= 7; ++k)
      c.expect(s.fit.value()(k) == Rational(s.values[static_cast<std::size_t>(k - 1)]),
               q_str(q) + ": fit misses k=" + std::to_string(k));
  }
  const auto base = lr_stretch(LRQuery{Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}}, 7, options);
  for (int k = 1; k <= 7; ++k)
    c.expect(base.values[static_cast<std::size_t>(k - 1)] == static_cast<std::uint64_t>(k + 1),
             "(2,1|2,1|3,2,1) at k=" + std::to_string(k) + " is not k+1");
  return c.summary("10 series fitted exactly, degrees up to " + std::to_string(max_degree_seen) +
                   "; (2,1|2,1|3,2,1) gives k+1");
}

std::string plethysm(Checker& c) {
  const Multiplicities p22 = plethysm_expand(Partition{2}, Partition{2});
  c.expect(p22 == Multiplicities{{Partition{4}, 1}, {Partition{2, 2}, 1}}, "(2)[(2)] expansion");
  const Multiplicities p112 = plethysm_expand(Partition{1, 1}, Partition{2});
  c.expect(p112 == Multiplicities{{Partition{3, 1}, 1}}, "(1,1)[(2)] expansion");
  std::size_t pairs = 0;
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; a * b <= 8; ++b)
      for (const auto& pi : partitions_of(a))
        for (const auto& mu : partitions_of(b)) {
          const auto m = plethysm_expand(pi, mu, 8);
          ++pairs;
          for (int n = 1; n <= 3; ++n) {
            std::uint64_t lhs = 0;
            for (const auto& [lam, mult] : m) lhs += mult * dim_weyl(lam, n);
            const auto inner = static_cast<int>(dim_weyl(mu, n));
            c.expect(lhs == dim_weyl(pi, inner), pi.to_string() + "[" + mu.to_string() + "] at n=" + std::to_string(n));
          }
        }
  return c.summary("both expansions match; dimension identity on " + std::to_string(pairs) + " pairs, n <= 3");
}

std::string kronecker_checks(Checker& c) {
  for (int m = 1; m <= 5; ++m) {
    const auto parts = partitions_of(m);
    for (const auto& l : parts)
      for (const auto& u : parts) {
        c.expect(kronecker(Partition{m}, l, u) == (l == u ? 1u : 0u),
                 "g((" + std::to_string(m) + ")," + l.to_string() + "," + u.to_string() + ")");
        for (const auto& v : parts) {
          const auto g = kronecker(l, u, v);
          c.expect(g == kronecker(u, l, v) && g == kronecker(v, u, l) && g == kronecker(l, v, u),
                   "symmetry at " + l.to_string() + "|" + u.to_string() + "|" + v.to_string());
        }
      }
  }
  c.expect(det_stabilizer_invariant_mult(Partition{2}, 2) == 1, "det invariant for (2), m=2");
  c.expect(det_stabilizer_invariant_mult(Partition{1, 1}, 2) == 0, "det invariant for (1,1), m=2");
  return c.summary("Cauchy deltas, argument symmetry up to n=5, determinant-stabilizer examples");
}

std::string even_partitions(Checker& c) {
  std::string values;
  for (int n = 2; n <= 3; ++n)
    for (const auto& gamma : partitions_of(2 * n, static_cast<std::size_t>(n))) {
      const auto d = perm_stabilizer_invariants(gamma, n);
      values += (values.empty() ? "" : " ") + gamma.to_string() + ":" + std::to_string(d);
      c.expect((d > 0) == is_even(gamma), "gamma=" + gamma.to_string() + " n=" + std::to_string(n));
    }
  return c.summary("plain permutation matrices; " + values);
}

std::string symmetry(Checker& c) {
  for (auto kind : {FormKind::determinant, FormKind::permanent})
    for (int size : {2, 3}) {
      const auto s = symmetry_characterization(kind, size);
      const std::string name = std::string(kind == FormKind::determinant ? "det" : "perm") + std::to_string(size);
      c.expect(s.dimension == 1, name + ": fixed dimension " + std::to_string(s.dimension));
      c.expect(s.spans_reference, name + ": fixed line is not spanned by the form");
    }
  return c.summary("det and perm at sizes 2 and 3 each span a 1-dimensional fixed space");
}

std::string magic(Checker& c) {
  std::string dims;
  for (int n = 2; n <= 3; ++n) {
    const auto w1 = enumerate_magic_squares(n, 1);
    c.expect(w1.squares.size() == (n == 2 ? 2u : 6u) && w1.orbit_count() == 1,
             "weight-1 squares for n=" + std::to_string(n));
    for (int r = 0; r <= 3; ++r) {
      try {
        const auto rep = invariant_dimension_report(n, r);
        dims += (dims.empty() ? "" : " ") + std::to_string(n) + "/" + std::to_string(r) + ":" +
                std::to_string(rep.orbit_count);
        c.expect(rep.orbit_count == rep.fixed_space_dim && rep.basic_invariant_rank == rep.orbit_count,
                 "n=" + std::to_string(n) + " r=" + std::to_string(r));
      } catch (const std::logic_error& e) {
        c.expect(false, e.what());
      }
    }
  }
  return c.summary("orbits = invariant dimension (n/r:dim " + dims + ")");
}

std::string family(Checker& c) {
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  const int code = cli::run({"obstruct", "emit", "--max", "50"}, out, err);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(code == 0, "emit exited with " + std::to_string(code));
  c.expect(seconds < 1.0, "emission took " + std::to_string(seconds) + " s");
  const Json doc = Json::parse(out.str());
  const auto& certs = doc.at("payload").at("certificates");
  c.expect(certs.size() == 49, "expected 49 certificates, got " + std::to_string(certs.size()));
  for (const auto& j : certs) {
    const auto cert = certificate_from_json(j);
    try {
      const auto v = verify_obstruction(cert, false);
      c.expect(v.checks.even && v.checks.alpha_neq_beta && v.gamma == Partition{2 * cert.n},
               "certificate n=" + std::to_string(cert.n));
    } catch (const std::exception& e) {
      c.expect(false, e.what());
    }
  }
  std::ostringstream full_out;
  c.expect(cli::run({"obstruct", "emit", "--max", "3", "--full"}, full_out, err) == 0, "full emission failed");
  const Json full = Json::parse(full_out.str());
  for (const auto& j : full.at("payload").at("certificates")) {
    const auto& dim = j.at("checks").at("invariant_dim");
    c.expect(dim.is_number_integer() && dim.get<int>() >= 1, "invariant_dim for n=" + j.at("n").dump());
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  return c.summary("49 certificates in " + std::string(buf) + " s; n=2,3 full checks positive");
}

std::string kempf(Checker& c) {
  for (int n = 2; n <= 4; ++n) {
    const auto v = kempf_irreducibility_check(n);
    c.expect(v.stable && !v.degenerate, "n=" + std::to_string(n));
  }
  return c.summary("n = 2, 3, 4 stable");
}

std::string ehrhart(Checker& c) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<RationalVector> rows;
    RationalVector b, shift;
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector up(n, Rational(0)), down(n, Rational(0));
      up[i] = 1;
      down[i] = -1;
      rows.push_back(up);
      b.emplace_back(1);
      rows.push_back(down);
      b.emplace_back(0);
    }
    const ParamPolytope cube(RationalMatrix::from_rows(rows), b, {});
    const auto counts = ehrhart_counts(cube, 5);
    for (int k = 1; k <= 5; ++k) {
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= static_cast<std::uint64_t>(k + 1);
      c.expect(counts[static_cast<std::size_t>(k - 1)] == expected,
               "cube n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    c.expect(count_integer_points(cube.at(0)) == 1, "cube at k=0");
  }
  RationalMatrix a(2, 1);
  a(0, 0) = 1;
  a(1, 0) = -1;
  const ParamPolytope half(a, {Rational(1, 2), Rational(0)}, {});
  const auto counts = ehrhart_counts(half, 10);
  FitOptions options;
  options.max_period = 4;
  options.max_degree = 3;
  options.holdout = 2;
  const auto q = fit_quasipolynomial(counts, options);
  c.expect(q.period() == 2, "half interval period " + std::to_string(q.period()));
  for (int k = 1; k <= 10; ++k) c.expect(q(k) == Rational(k / 2 + 1), "half interval k=" + std::to_string(k));
  return c.summary("(k+1)^n for n <= 3, k <= 5; half interval fits period 2");
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::string (*body)(Checker&);
};

}  // namespace

std::string format_result(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2f s)", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + buf + ": " +
         r.detail;
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
  const Criterion criteria[] = {
      {1, "LR oracle triangle", 120, lr_triangle},
      {2, "Saturation", 120, saturation},
      {3, "LR stretching is quasi-polynomial", 300, stretching},
      {4, "Plethysm oracle", 300, plethysm},
      {5, "Kronecker/Cauchy consistency", 120, kronecker_checks},
      {6, "Even-partition criterion", 600, even_partitions},
      {7, "Symmetry characterization", 600, symmetry},
      {8, "Magic-square basis", 300, magic},
      {9, "Strongly explicit family", 60, family},
      {10, "Kempf criterion", 1, kempf},
      {11, "Ehrhart kernel", 60, ehrhart},
  };
  std::vector<CriterionResult> results;
  for (const auto& crit : criteria) {
    CriterionResult r;
    r.id = crit.id;
    r.title = crit.title;
    r.time_limit_seconds = crit.limit;
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = crit.body(checker);
      r.passed = checker.passed();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
      r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && r.seconds > r.time_limit_seconds) {
      r.passed = false;
      r.detail += "; exceeded time limit";
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace gct
