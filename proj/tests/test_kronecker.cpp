#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "gct/kronecker.hpp"

using namespace gct;

namespace {

// Frobenius oracle: chi_lambda(mu) = [x^{lambda + delta}] a_delta p_mu.
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

long long frobenius_character(const Partition& lambda, const Partition& mu) {
  const int n = std::max(lambda.size(), 1);
  const auto nn = static_cast<std::size_t>(n);
  FullPoly f{{Exponent(nn, 0), 1}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Exponent xi(nn, 0), xj(nn, 0);
      xi[static_cast<std::size_t>(i)] = 1;
      xj[static_cast<std::size_t>(j)] = 1;
      f = multiply(f, FullPoly{{xi, 1}, {xj, -1}});
    }
  for (int r : mu.parts()) {
    FullPoly p;
    for (std::size_t i = 0; i < nn; ++i) {
      Exponent e(nn, 0);
      e[i] = r;
      p[e] = 1;
    }
    f = multiply(f, p);
  }
  Exponent target(nn);
  for (std::size_t i = 0; i < nn; ++i) target[i] = lambda[i] + static_cast<int>(nn - 1 - i);
  const auto it = f.find(target);
  return it == f.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("characters") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n)) CHECK(sym_character(Partition{n}, mu) == 1);
  CHECK(sym_character(Partition{1, 1}, Partition{2}) == -1);
  CHECK(sym_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK_THROWS_AS(sym_character(Partition{2, 1}, Partition{2}), std::invalid_argument);
}

TEST_CASE("Murnaghan-Nakayama agrees with the Frobenius formula") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) CHECK(sym_character(lambda, mu) == frobenius_character(lambda, mu));
}

TEST_CASE("degrees count standard tableaux") {
  for (int n = 1; n <= 10; ++n) {
    const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& lambda : partitions_of(n))
      CHECK(sym_character(lambda, ones) == static_cast<std::int64_t>(count_standard_tableaux(lambda)));
  }
}

TEST_CASE("row and column orthogonality up to n = 7") {
  for (int n = 0; n <= 7; ++n) {
    const auto t = character_table(n);
    const std::size_t size = t->partitions().size();
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) {
        Integer rows = 0, cols = 0;
        for (std::size_t k = 0; k < size; ++k) {
          rows += t->class_size(k) * Integer(static_cast<long>(t->value(a, k) * t->value(b, k)));
          cols += Integer(static_cast<long>(t->value(k, a) * t->value(k, b)));
        }
        CHECK(rows == (a == b ? t->group_order() : Integer(0)));
        // sum over irreps chi(a) chi(b) = centralizer order delta_ab
        CHECK(cols == (a == b ? t->group_order() / t->class_size(a) : Integer(0)));
      }
  }
}

TEST_CASE("kronecker examples") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) CHECK(kronecker(lambda, mu, Partition{n}) == (lambda == mu ? 1u : 0u));
  CHECK(kronecker(Partition{1, 1}, Partition{1, 1}, Partition{2}) == 1);
  CHECK(kronecker(Partition{2, 1}, Partition{2, 1}, Partition{2, 1}) == 1);
  CHECK_THROWS_AS(kronecker(Partition{2}, Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("kronecker is symmetric under argument permutations for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps)
        for (const auto& c : ps) {
          const auto g = kronecker(a, b, c);
          CHECK(kronecker(a, c, b) == g);
          CHECK(kronecker(b, a, c) == g);
          CHECK(kronecker(b, c, a) == g);
          CHECK(kronecker(c, a, b) == g);
          CHECK(kronecker(c, b, a) == g);
        }
  }
}

TEST_CASE("determinant stabilizer invariants") {
  CHECK(det_stabilizer_invariant_mult(Partition{3}, 2) == 0);
  CHECK(det_stabilizer_invariant_mult(Partition{2}, 2) == 1);
  CHECK(det_stabilizer_invariant_mult(Partition{1, 1}, 2) == 0);
  CHECK_THROWS_AS(det_stabilizer_invariant_mult(Partition{1, 1, 1, 1, 1}, 2), std::invalid_argument);
  for (int size = 1; size <= 7; ++size)
    for (const auto& lambda : partitions_of(size, 4))
      if (size % 2 != 0) CHECK(det_stabilizer_invariant_mult(lambda, 2) == 0);
}

TEST_CASE("g_stretch") {
  const auto two = g_stretch(Partition{2}, 2, 4);
  CHECK(two.values == std::vector<std::uint64_t>{1, 1, 1, 1});

  const auto one = g_stretch(Partition{1}, 2, 4);
  CHECK(one.values[0] == 0);
  CHECK(one.values[2] == 0);
  CHECK(one.values[1] == kronecker(Partition{2}, Partition{1, 1}, Partition{1, 1}));
  CHECK(one.values[3] == kronecker(Partition{4}, Partition{2, 2}, Partition{2, 2}));

  const auto square = g_stretch(Partition{2, 2}, 2, 3);
  REQUIRE(square.values.size() == 3);
  CHECK(square.values[0] == kronecker(Partition{2, 2}, Partition{2, 2}, Partition{2, 2}));
  CHECK(square.values[0] == 1);
  CHECK(square.values[1] == kronecker(Partition{4, 4}, Partition{4, 4}, Partition{4, 4}));
  CHECK(square.values[2] == kronecker(Partition{6, 6}, Partition{6, 6}, Partition{6, 6}));

  CHECK_THROWS_WITH_AS(g_stretch(Partition{3}, 2, 5), doctest::Contains("k=5"), std::invalid_argument);
}
