#include "doctest.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gct/symfunc.hpp"

#include <map>

using namespace gct;

namespace {

// Independent oracle: full (non-symmetric) integer polynomials, Schur
// coefficients read off through the bialternant a_delta * f.
using Exponent = std::vector<int>;
using FullPoly = std::map<Exponent, long long>;

FullPoly multiply(const FullPoly& f, const FullPoly& g) {
  FullPoly out;
  for (const auto& [a, x] : f)
    for (const auto& [b, y] : g) {
      Exponent e(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
      out[e] += x * y;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

FullPoly schur_full(const Partition& lambda, int n) {
  FullPoly out;
  for (const auto& t : enumerate_ssyt(lambda, n)) out[t.content(n)] += 1;
  return out;
}

FullPoly vandermonde(int n) {
  FullPoly out{{Exponent(static_cast<std::size_t>(n), 0), 1}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Exponent xi(static_cast<std::size_t>(n), 0), xj(static_cast<std::size_t>(n), 0);
      xi[static_cast<std::size_t>(i)] = 1;
      xj[static_cast<std::size_t>(j)] = 1;
      out = multiply(out, FullPoly{{xi, 1}, {xj, -1}});
    }
  return out;
}

std::map<Partition, long long> bialternant_expand(const FullPoly& f, int n) {
  std::map<Partition, long long> out;
  for (const auto& [e, c] : multiply(vandermonde(n), f)) {
    bool strict = true;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) strict = strict && e[i] > e[i + 1];
    if (!strict) continue;
    std::vector<int> lambda(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) lambda[i] = e[i] - static_cast<int>(e.size() - 1 - i);
    out[Partition::from_padded(lambda)] = c;
  }
  return out;
}

// s_pi[s_mu] by substituting the monomials of s_mu into s_pi, as full polynomials.
FullPoly plethysm_full(const Partition& pi, const Partition& mu, int n) {
  std::vector<Exponent> ys;
  for (const auto& t : enumerate_ssyt(mu, n)) ys.push_back(t.content(n));
  FullPoly out;
  for (const auto& t : enumerate_ssyt(pi, static_cast<int>(ys.size()))) {
    Exponent e(static_cast<std::size_t>(n), 0);
    for (const auto& row : t.rows())
      for (int v : row)
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += ys[static_cast<std::size_t>(v - 1)][i];
    out[e] += 1;
  }
  return out;
}

Multiplicities as_mult(const std::map<Partition, long long>& m) {
  Multiplicities out;
  for (const auto& [k, v] : m) {
    REQUIRE(v > 0);
    out[k] = static_cast<std::uint64_t>(v);
  }
  return out;
}

}  // namespace

TEST_CASE("schur polynomials") {
  const auto e2 = schur(Partition{1, 1}, 2);
  CHECK(e2.terms().size() == 1);
  CHECK(e2.coefficient(Partition{1, 1}) == 1);

  const auto h2 = schur(Partition{2}, 2);
  CHECK(h2.terms().size() == 2);
  CHECK(h2.coefficient(Partition{2}) == 1);
  CHECK(h2.coefficient(Partition{1, 1}) == 1);

  CHECK(schur(Partition{1, 1, 1}, 2).is_zero());
  CHECK(schur(Partition{2, 1}, 3).homogeneous_degree() == 3);
}

TEST_CASE("schur_expand") {
  SymPoly m11(2);
  m11.add(Partition{1, 1}, 1);
  CHECK(schur_expand(m11) == SchurExpansion{{Partition{1, 1}, 1}});

  SymPoly h2(2);
  h2.add(Partition{2}, 1);
  h2.add(Partition{1, 1}, 1);
  CHECK(schur_expand(h2) == SchurExpansion{{Partition{2}, 1}});

  CHECK(schur_expand(SymPoly(3)).empty());

  SymPoly mixed(2);
  mixed.add(Partition{2}, 1);
  mixed.add(Partition{1}, 1);
  CHECK_THROWS_AS(schur_expand(mixed), std::invalid_argument);
}

TEST_CASE("schur_expand inverts schur") {
  for (int size = 0; size <= 6; ++size)
    for (const auto& lambda : partitions_of(size))
      for (int n = static_cast<int>(lambda.length()); n <= 6; ++n) {
        if (n == 0) continue;
        CHECK(schur_expand(schur(lambda, n)) == SchurExpansion{{lambda, 1}});
      }
}

TEST_CASE("schur_expand reconstructs its input") {
  const int n = 4;
  SymPoly f = schur(Partition{2, 1}, n) * schur(Partition{1, 1}, n);
  f += schur(Partition{3, 2}, n) * Rational(-2, 3);
  SymPoly rebuilt(n);
  for (const auto& [lambda, c] : schur_expand(f)) rebuilt += schur(lambda, n) * c;
  CHECK(rebuilt == f);
}

TEST_CASE("product_expand") {
  CHECK(product_expand(Partition{1}, Partition{1}) == Multiplicities{{Partition{2}, 1}, {Partition{1, 1}, 1}});
  const Multiplicities expected{{Partition{4, 2}, 1},    {Partition{4, 1, 1}, 1}, {Partition{3, 3}, 1},
                                {Partition{3, 2, 1}, 2}, {Partition{3, 1, 1, 1}, 1}, {Partition{2, 2, 2}, 1},
                                {Partition{2, 2, 1, 1}, 1}};
  CHECK(product_expand(Partition{2, 1}, Partition{2, 1}) == expected);
  CHECK(as_mult(bialternant_expand(multiply(schur_full(Partition{2, 1}, 6), schur_full(Partition{2, 1}, 6)), 6)) ==
        expected);
  CHECK(product_expand(Partition{3, 1}, Partition{}) == Multiplicities{{Partition{3, 1}, 1}});
}

TEST_CASE("product_expand agrees with the bialternant oracle and commutes") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& alpha : partitions_of(a))
        for (const auto& beta : partitions_of(b)) {
          const auto pe = product_expand(alpha, beta);
          CHECK(pe == product_expand(beta, alpha));
          const int n = std::max(a + b, 1);
          CHECK(pe == as_mult(bialternant_expand(multiply(schur_full(alpha, n), schur_full(beta, n)), n)));
        }
}

TEST_CASE("product_expand commutes up to size 4 and preserves dimension") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const auto& alpha : partitions_of(a))
        for (const auto& beta : partitions_of(b)) {
          const auto pe = product_expand(alpha, beta);
          CHECK(pe == product_expand(beta, alpha));
          for (int n = 1; n <= 4; ++n) {
            std::uint64_t sum = 0;
            for (const auto& [lambda, c] : pe) sum += c * dim_weyl(lambda, n);
            CHECK(sum == dim_weyl(alpha, n) * dim_weyl(beta, n));
          }
        }
}

TEST_CASE("plethysm_expand") {
  CHECK(plethysm_expand(Partition{2}, Partition{2}) == Multiplicities{{Partition{4}, 1}, {Partition{2, 2}, 1}});
  CHECK(plethysm_expand(Partition{1, 1}, Partition{2}) == Multiplicities{{Partition{3, 1}, 1}});
  CHECK(as_mult(bialternant_expand(plethysm_full(Partition{2}, Partition{2}, 4), 4)) ==
        Multiplicities{{Partition{4}, 1}, {Partition{2, 2}, 1}});
  CHECK(as_mult(bialternant_expand(plethysm_full(Partition{1, 1}, Partition{2}, 4), 4)) ==
        Multiplicities{{Partition{3, 1}, 1}});
  for (const auto& mu : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}, Partition{}})
    CHECK(plethysm_expand(Partition{1}, mu) == Multiplicities{{mu, 1}});
  CHECK_THROWS_AS(plethysm_expand(Partition{3}, Partition{4}), std::invalid_argument);
  CHECK_THROWS_AS(plethysm_expand(Partition{3}, Partition{2}, 5), std::invalid_argument);
  CHECK(plethysm_expand(Partition{3}, Partition{2}, 6) ==
        Multiplicities{{Partition{6}, 1}, {Partition{4, 2}, 1}, {Partition{2, 2, 2}, 1}});
}

TEST_CASE("plethysm agrees with the substitution oracle") {
  for (const auto& [pi, mu] : std::vector<std::pair<Partition, Partition>>{
           {Partition{2}, Partition{1, 1}}, {Partition{3}, Partition{2}}, {Partition{2, 1}, Partition{2}},
           {Partition{2}, Partition{2, 1}}, {Partition{1, 1}, Partition{1, 1}}}) {
    const int n = pi.size() * mu.size();
    CHECK(plethysm_expand(pi, mu) == as_mult(bialternant_expand(plethysm_full(pi, mu, n), n)));
  }
}
