#include "doctest.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gct/linalg.hpp"

using namespace gct;

namespace {

RationalMatrix m(std::vector<std::vector<int>> rows) {
  std::vector<RationalVector> q;
  for (const auto& r : rows) {
    RationalVector row;
    for (int x : r) row.emplace_back(x);
    q.push_back(row);
  }
  return RationalMatrix::from_rows(q);
}

}  // namespace

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("rank, nullspace and inverse") {
  const auto a = m({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  for (const auto& v : a * ns[0]) CHECK(v == 0);

  const auto b = m({{2, 1}, {7, 4}});
  const auto inv = inverse(b);
  REQUIRE(inv.has_value());
  CHECK(b * *inv == RationalMatrix::identity(2));
  CHECK(determinant(b) == 1);
  CHECK_FALSE(inverse(m({{1, 2}, {2, 4}})).has_value());
}
