#include "doctest.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gct/quasipolynomial.hpp"

using namespace gct;

namespace {

std::vector<std::uint64_t> sample(int count, auto f) {
  std::vector<std::uint64_t> v;
  for (int k = 1; k <= count; ++k) v.push_back(static_cast<std::uint64_t>(f(k)));
  return v;
}

}  // namespace

TEST_CASE("polynomial fit") {
  const auto values = sample(8, [](int k) { return (k + 1) * (k + 1); });
  const auto q = fit_quasipolynomial(values, {.max_period = 2, .max_degree = 2, .holdout = 2});
  CHECK(q.period() == 1);
  CHECK(q.components()[0] == Polynomial{1, 2, 1});
}

TEST_CASE("period-two fit of the half interval counts") {
  const auto values = sample(10, [](int k) { return k / 2 + 1; });
  const auto q = fit_quasipolynomial(values, {.max_period = 2, .max_degree = 3, .holdout = 2});
  CHECK(q.period() == 2);
  // Even k: (k + 2)/2, odd k: (k + 1)/2.
  CHECK(q.components()[0] == Polynomial{1, Rational(1, 2)});
  CHECK(q.components()[1] == Polynomial{Rational(1, 2), Rational(1, 2)});
  for (int k = 1; k <= 10; ++k) CHECK(q(k) == values[static_cast<std::size_t>(k - 1)]);
}

TEST_CASE("exponential data is rejected") {
  CHECK_THROWS_WITH_AS(fit_quasipolynomial(std::vector<std::uint64_t>{1, 2, 4, 8}, {.max_period = 1, .max_degree = 1}),
                       "not quasi-polynomial within bounds", std::domain_error);
  CHECK_THROWS_AS(fit_quasipolynomial(std::vector<std::uint64_t>{1, 2, 4, 8}, {}), std::domain_error);
  CHECK_THROWS_AS(fit_quasipolynomial(sample(12, [](int k) { return 1 << k; }), {}), std::domain_error);
}

TEST_CASE("skip_prefix ignores an initial deviation") {
  // 5, then k^2 from k = 2 on.
  auto values = sample(9, [](int k) { return k * k; });
  values[0] = 5;
  CHECK_THROWS_AS(fit_quasipolynomial(values, {.max_period = 1, .max_degree = 2, .holdout = 2}), std::domain_error);
  const auto q = fit_quasipolynomial(values, {.max_period = 1, .max_degree = 2, .holdout = 2, .skip_prefix = 1});
  CHECK(q.components()[0] == Polynomial{0, 0, 1});
}

TEST_CASE("fits reproduce every supplied value") {
  const std::vector<std::function<std::uint64_t(int)>> fns = {
      [](int k) { return static_cast<std::uint64_t>(k % 3 == 0 ? k * k : k + 4); },
      [](int k) { return static_cast<std::uint64_t>((k * k * k + 3 * k) / 2 + (k % 2)); },
      [](int) { return std::uint64_t{0}; },
  };
  for (const auto& f : fns) {
    const auto values = sample(20, f);
    const auto q = fit_quasipolynomial(values, {.max_period = 4, .max_degree = 3, .holdout = 3});
    for (int k = 1; k <= 20; ++k) CHECK(q(k) == values[static_cast<std::size_t>(k - 1)]);
  }
  const auto zero = fit_quasipolynomial(sample(6, [](int) { return 0; }), {});
  CHECK(zero.period() == 1);
  CHECK(zero.components()[0] == Polynomial{0});
}

TEST_CASE("fit option validation") {
  CHECK_THROWS_AS(fit_quasipolynomial(std::vector<std::uint64_t>{1, 2}, {.holdout = 2}), std::invalid_argument);
  CHECK_THROWS_AS(fit_quasipolynomial(std::vector<std::uint64_t>{1, 2, 3}, {.holdout = 0}), std::invalid_argument);
}
