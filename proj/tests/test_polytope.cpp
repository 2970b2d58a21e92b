#include "doctest.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gct/lp.hpp"
#include "gct/polytope.hpp"
#include "test_helpers.hpp"

using namespace gct;
using gct::testing::cube;
using gct::testing::int_matrix;

namespace {

// Triangle with vertices (0,0), (1/2,0), (0,1/2).
Polytope small_triangle() {
  return Polytope(int_matrix({{-1, 0}, {0, -1}, {2, 2}}), {Rational(0), Rational(0), Rational(1)});
}

// Oracle: every pairwise intersection of constraint lines that lies in P.
std::vector<RationalVector> vertices_by_pairs(const Polytope& p) {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < p.num_constraints(); ++i) {
    for (std::size_t j = i + 1; j < p.num_constraints(); ++j) {
      const Rational a = p.a()(i, 0), b = p.a()(i, 1), c = p.a()(j, 0), d = p.a()(j, 1);
      const Rational det = a * d - b * c;
      if (det == 0) continue;
      RationalVector x{(p.b()[i] * d - b * p.b()[j]) / det, (a * p.b()[j] - c * p.b()[i]) / det};
      if (p.contains(x)) out.push_back(x);
    }
  }
  return out;
}

std::uint64_t brute_count_box(const Polytope& p, int lo, int hi) {
  std::uint64_t n = 0;
  for (int x = lo; x <= hi; ++x)
    for (int y = lo; y <= hi; ++y)
      if (p.contains({Rational(x), Rational(y)})) ++n;
  return n;
}

}  // namespace

TEST_CASE("exact LP") {
  // max x + y on the unit square.
  const auto sq = cube(2, 1);
  const auto r = maximize(sq.a(), sq.b(), {Rational(1), Rational(1)});
  CHECK(r.status == LpStatus::optimal);
  CHECK(r.value == 2);
  // Unbounded direction.
  const Polytope half(int_matrix({{-1}}), {Rational(0)});
  CHECK(maximize(half.a(), half.b(), {Rational(1)}).status == LpStatus::unbounded);
  // Rational optimum.
  const auto tri = small_triangle();
  const auto t = maximize(tri.a(), tri.b(), {Rational(3), Rational(1)});
  CHECK(t.status == LpStatus::optimal);
  CHECK(t.value == Rational(3, 2));
  CHECK(t.point == RationalVector{Rational(1, 2), Rational(0)});
}

TEST_CASE("feasible") {
  CHECK_FALSE(feasible(Polytope(int_matrix({{1}, {-1}}), {Rational(-1), Rational(0)})));
  CHECK(feasible(cube(1, 1)));
  // A system where only a combination of rows reveals infeasibility.
  CHECK_FALSE(feasible(Polytope(int_matrix({{1, 1}, {-1, 0}, {0, -1}}), {Rational(-1), Rational(0), Rational(0)})));
  CHECK(feasible(Polytope(int_matrix({{1, 1}, {-1, -1}}), {Rational(1, 3), Rational(-1, 3)})));
}

TEST_CASE("count_integer_points") {
  CHECK(count_integer_points(cube(2, 1)) == 4);
  CHECK(count_integer_points(cube(2, 3)) == 16);
  const Polytope simplex2(int_matrix({{-1, 0}, {0, -1}, {1, 1}}), {Rational(0), Rational(0), Rational(2)});
  CHECK(count_integer_points(simplex2) == brute_count_box(simplex2, -1, 3));
  CHECK(count_integer_points(simplex2) == 6);
  CHECK(count_integer_points(Polytope(int_matrix({{1}, {-1}}), {Rational(-1), Rational(0)})) == 0);
  CHECK_THROWS_WITH_AS(count_integer_points(Polytope(int_matrix({{-1, 0}}), {Rational(0)})), "unbounded polytope",
                       std::domain_error);
}

TEST_CASE("cube dilations give (k+1)^n") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k = 0; k <= 5; ++k) {
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= static_cast<std::uint64_t>(k + 1);
      CHECK(count_integer_points(cube(n, k)) == expected);
      CHECK(ehrhart_counts(ParamPolytope(cube(n, 1)), 5)[static_cast<std::size_t>(std::max(k, 1) - 1)] ==
            count_integer_points(cube(n, std::max(k, 1))));
    }
  }
}

TEST_CASE("vertex") {
  CHECK(vertex(cube(2, 1)) == RationalVector{0, 0});
  const Polytope point(int_matrix({{-1}, {1}}), {Rational(-1, 3), Rational(1, 3)});
  CHECK(vertex(point) == RationalVector{Rational(1, 3)});
  const auto tri = small_triangle();
  const auto v = vertex(tri);
  const auto oracle = vertices_by_pairs(tri);
  CHECK(v == RationalVector{0, 0});
  CHECK(std::find(oracle.begin(), oracle.end(), v) != oracle.end());
  CHECK(oracle.size() == 3);

  CHECK_THROWS_WITH_AS(vertex(Polytope(int_matrix({{1}, {-1}}), {Rational(-1), Rational(0)})), "infeasible polytope",
                       std::domain_error);
  // A strip is feasible but has no vertex.
  CHECK_THROWS_WITH_AS(vertex(Polytope(int_matrix({{1, 0}, {-1, 0}}), {Rational(1), Rational(0)})), "no vertex",
                       std::domain_error);
  // Pointed but unbounded below: the lexicographic minimum does not exist.
  const Polytope cone(int_matrix({{1, 1}, {1, -1}}), {Rational(0), Rational(0)});
  const auto apex = vertex(cone);
  CHECK(is_vertex(cone, apex));
  CHECK(apex == RationalVector{0, 0});
}

TEST_CASE("vertex of a feasible pointed polytope satisfies every constraint") {
  const Polytope skew(int_matrix({{2, 1}, {-1, 3}, {-3, -2}, {1, -4}}),
                      {Rational(7, 2), Rational(5), Rational(1, 3), Rational(2)});
  REQUIRE(feasible(skew));
  const auto v = vertex(skew);
  CHECK(skew.contains(v));
  CHECK(is_vertex(skew, v));
  const auto oracle = vertices_by_pairs(skew);
  CHECK(std::find(oracle.begin(), oracle.end(), v) != oracle.end());
}

TEST_CASE("ehrhart_counts") {
  const auto unit = ParamPolytope(cube(2, 1));
  CHECK(ehrhart_counts(unit, 3) == std::vector<std::uint64_t>{4, 9, 16});
  // 0 <= x <= k/2
  const ParamPolytope half(int_matrix({{1}, {-1}}), {Rational(1, 2), Rational(0)}, {});
  CHECK(ehrhart_counts(half, 6) == std::vector<std::uint64_t>{1, 2, 2, 3, 3, 4});
  const ParamPolytope simplex(int_matrix({{-1, 0}, {0, -1}, {1, 1}}), {Rational(0), Rational(0), Rational(1)}, {});
  CHECK(ehrhart_counts(simplex, 3) == std::vector<std::uint64_t>{3, 6, 10});
  const ParamPolytope ray(int_matrix({{-1}}), {Rational(0)}, {});
  CHECK_THROWS_WITH_AS(ehrhart_counts(ray, 2), "unbounded polytope at k=1", std::domain_error);
  // Offset c shifts every slice: 1 <= x <= k + 1.
  const ParamPolytope shifted(int_matrix({{1}, {-1}}), {Rational(1), Rational(0)}, {Rational(1), Rational(-1)});
  CHECK(ehrhart_counts(shifted, 3) == std::vector<std::uint64_t>{2, 3, 4});
}

TEST_CASE("smallest_integral_dilation") {
  const Polytope third(int_matrix({{-1}, {1}}), {Rational(-1, 3), Rational(1, 3)});
  const auto d = smallest_integral_dilation(third);
  CHECK(d.k == 3);
  CHECK(d.point == std::vector<Integer>{1});

  const auto sq = smallest_integral_dilation(cube(2, 1));
  CHECK(sq.k == 1);
  CHECK(sq.point == std::vector<Integer>{0, 0});

  const auto tri = small_triangle();
  const auto chosen = smallest_integral_dilation(tri, {Rational(1, 2), Rational(0)});
  CHECK(chosen.k == 2);
  CHECK(chosen.point == std::vector<Integer>{1, 0});
  // The dilated point lies in the dilated polytope.
  CHECK(ParamPolytope(tri).at(2).contains({Rational(1), Rational(0)}));

  CHECK_THROWS_AS(smallest_integral_dilation(tri, {Rational(1, 8), Rational(1, 8)}), std::invalid_argument);
  CHECK_THROWS_AS(smallest_integral_dilation(Polytope(int_matrix({{1}, {-1}}), {Rational(-1), Rational(0)})),
                  std::domain_error);
}
