#include "doctest.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gct/lr.hpp"
#include "gct/symfunc.hpp"

using namespace gct;

namespace {

std::uint64_t product_coefficient(const LRQuery& q) {
  const auto pe = product_expand(q.alpha, q.beta);
  const auto it = pe.find(q.lambda);
  return it == pe.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("hive polytope examples") {
  CHECK(count_integer_points(hive_polytope({Partition{1}, Partition{1}, Partition{2}})) == 1);
  CHECK(count_integer_points(hive_polytope({Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}})) == 2);
  CHECK_THROWS_AS(hive_polytope({Partition{1}, Partition{1}, Partition{3}}), std::invalid_argument);
  CHECK(feasible(hive_polytope({Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}})));
  CHECK_THROWS_AS(hive_polytope({Partition{1}, Partition{1}, Partition{1, 1}}, 1), std::invalid_argument);
}

TEST_CASE("lr_coefficient") {
  CHECK(lr_coefficient({Partition{1}, Partition{1}, Partition{1, 1}}) == 1);
  CHECK(lr_coefficient({Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}}) == 2);
  // alpha not inside lambda
  CHECK(lr_coefficient({Partition{3}, Partition{1}, Partition{2, 2}}) == 0);
  CHECK(lr_coefficient({Partition{1}, Partition{1}, Partition{3}}) == 0);
  const auto detail = lr_coefficient_detail({Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}});
  CHECK(detail.tableau == 2);
  CHECK(detail.hive == 2);
}

TEST_CASE("hive side does not change the count") {
  const LRQuery q{Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}};
  for (std::size_t n = 3; n <= 5; ++n) CHECK(count_integer_points(hive_polytope(q, n)) == 2);
}

TEST_CASE("tableau rule, hive count and Schur product agree up to size 3") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& alpha : partitions_of(a))
        for (const auto& beta : partitions_of(b))
          for (const auto& lambda : partitions_of(a + b)) {
            const LRQuery q{alpha, beta, lambda};
            const auto expected = product_coefficient(q);
            CHECK(lr_tableau_count(q) == expected);
            CHECK(count_integer_points(hive_polytope(q)) == expected);
            CHECK(lr_positive(q) == (expected > 0));
          }
}

TEST_CASE("lr_positive") {
  CHECK(lr_positive({Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}}));
  CHECK_FALSE(lr_positive({Partition{2}, Partition{2}, Partition{2, 1, 1}}));
  CHECK(lr_positive({Partition{1}, Partition{1}, Partition{2}}));
  CHECK_FALSE(lr_positive({Partition{1}, Partition{1}, Partition{3}}));
}

TEST_CASE("lr_stretch") {
  const auto s = lr_stretch({Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}}, 5);
  CHECK(s.values == std::vector<std::uint64_t>{2, 3, 4, 5, 6});
  REQUIRE(s.fit.has_value());
  CHECK(s.fit->period() == 1);
  CHECK(s.fit->components()[0] == Polynomial{1, 1});

  const auto one = lr_stretch({Partition{1}, Partition{1}, Partition{2}}, 4);
  CHECK(one.values == std::vector<std::uint64_t>{1, 1, 1, 1});
  CHECK(one.fit->components()[0] == Polynomial{1});

  const auto zero = lr_stretch({Partition{2}, Partition{2}, Partition{2, 1, 1}}, 4);
  CHECK(zero.values == std::vector<std::uint64_t>{0, 0, 0, 0});
  CHECK(zero.fit->components()[0] == Polynomial{0});

  CHECK_THROWS_AS(lr_stretch({Partition{1}, Partition{1}, Partition{2}}, 3), std::invalid_argument);
}
