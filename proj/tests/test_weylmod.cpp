#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "gct/weylmod.hpp"
#include "test_helpers.hpp"

using namespace gct;
using gct::testing::int_matrix;

namespace {

RationalMatrix random_invertible(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  while (true) {
    RationalMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        g(i, j) = Rational(num(rng), den(rng));
        g(i, j).canonicalize();
      }
    if (sgn(determinant(g)) != 0) return g;
  }
}

std::string zname(const MultiPoly& p, std::size_t n) { return p.to_string(matrix_var_names(n)); }

}  // namespace

TEST_CASE("Deruyts generators") {
  CHECK(zname(deruyts_generator(Tableau(Partition{1}, {{1}}), 2), 2) == "z11");
  const MultiPoly det2 = deruyts_generator(Tableau(Partition{1, 1}, {{1}, {2}}), 2);
  CHECK(det2 == determinant(symbolic_matrix(2)));
  CHECK(deruyts_generator(Tableau(Partition{1, 1}, {{1}, {1}}), 2).is_zero());
  // Row "12" over two one-cell columns gives z11 * z12.
  CHECK(zname(deruyts_generator(Tableau(Partition{2}, {{1, 2}}), 2), 2) == "z11*z12");
  CHECK_THROWS_AS(deruyts_generator(Tableau(Partition{1}, {{3}}), 2), std::invalid_argument);
}

TEST_CASE("Weyl module dimensions") {
  CHECK(weyl_module(Partition{1, 1}, 2).dimension() == 1);
  CHECK(weyl_module(Partition{2}, 2).dimension() == 3);
  CHECK(weyl_module(Partition{2, 1}, 3).dimension() == 8);
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 4; ++k)
      for (const auto& lam : partitions_of(k, n))
        CHECK(weyl_module(lam, n).dimension() == dim_weyl(lam, n));
  CHECK_THROWS_AS(weyl_module(Partition{6}, 4, 50), std::invalid_argument);
}

TEST_CASE("action matrices") {
  std::mt19937 rng(7);
  SUBCASE("identity and small representations") {
    const auto m = weyl_module(Partition{2, 1}, 3);
    CHECK(group_action_matrix(m, RationalMatrix::identity(3)) == RationalMatrix::identity(8));
    const auto std_rep = weyl_module(Partition{1}, 3);
    const auto g = random_invertible(3, rng);
    CHECK(group_action_matrix(std_rep, g) == g);
    const auto det_rep = weyl_module(Partition{1, 1}, 2);
    const auto h = random_invertible(2, rng);
    const auto a = group_action_matrix(det_rep, h);
    CHECK(a.rows() == 1);
    CHECK(a(0, 0) == determinant(h));
  }
  SUBCASE("singular element rejected") {
    const auto m = weyl_module(Partition{2}, 2);
    CHECK_THROWS_AS(group_action_matrix(m, int_matrix({{1, 2}, {2, 4}})), std::invalid_argument);
    CHECK_THROWS_AS(group_action_matrix(m, RationalMatrix::identity(3)), std::invalid_argument);
  }
  SUBCASE("homomorphism") {
    const std::vector<std::pair<Partition, int>> cases = {
        {Partition{2}, 2}, {Partition{2, 1}, 3}, {Partition{2, 2}, 3}, {Partition{3}, 3}, {Partition{2, 1}, 4}};
    for (const auto& [lam, n] : cases) {
      const auto m = weyl_module(lam, n);
      REQUIRE(m.dimension() <= 50);
      for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_invertible(static_cast<std::size_t>(n), rng);
        const auto h = random_invertible(static_cast<std::size_t>(n), rng);
        CHECK(group_action_matrix(m, g) * group_action_matrix(m, h) == group_action_matrix(m, g * h));
      }
    }
  }
  SUBCASE("weight grading") {
    const auto m = weyl_module(Partition{3, 1}, 3);
    RationalMatrix t(3, 3);
    t(0, 0) = 2;
    t(1, 1) = Rational(-1, 3);
    t(2, 2) = 5;
    const auto a = group_action_matrix(m, t);
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      Rational eig = 1;
      for (std::size_t i = 0; i < 3; ++i)
        for (int e = 0; e < m.basis()[j].weight[i]; ++e) eig *= t(i, i);
      for (std::size_t i = 0; i < m.dimension(); ++i) CHECK(a(i, j) == (i == j ? eig : Rational(0)));
    }
  }
}

TEST_CASE("highest weight vectors") {
  const auto m2 = weyl_module(Partition{2}, 2);
  CHECK(zname(m2.basis()[highest_weight_vector(m2)].poly, 2) == "z11^2");
  const auto m11 = weyl_module(Partition{1, 1}, 2);
  CHECK(m11.basis()[highest_weight_vector(m11)].poly == determinant(symbolic_matrix(2)));
  const auto m21 = weyl_module(Partition{2, 1}, 3);
  CHECK(m21.basis()[highest_weight_vector(m21)].tableau.to_string() == "11/2");
  for (const auto& lam : partitions_of(4, 3)) {
    const auto m = weyl_module(lam, 3);
    const auto& rows = m.basis()[highest_weight_vector(m)].tableau.rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
      CHECK(std::all_of(rows[r].begin(), rows[r].end(), [r](int v) { return v == static_cast<int>(r) + 1; }));
  }
}

TEST_CASE("fixed subspaces") {
  const auto swap = int_matrix({{0, 1}, {1, 0}});
  const auto m3 = weyl_module(Partition{2, 1}, 3);
  CHECK(fixed_subspace_dim(m3, {RationalMatrix::identity(3)}) == 8);
  CHECK(fixed_subspace_dim(weyl_module(Partition{2}, 2), {swap}, std::vector<int>{1, 1}) == 1);
  CHECK(fixed_subspace_dim(weyl_module(Partition{1, 1}, 2), {swap}) == 0);
  // Sym^2 of C^2 under the swap: z11^2 + z12^2 and z11 z12 survive.
  CHECK(fixed_subspace_dim(weyl_module(Partition{2}, 2), {swap}) == 2);
}

TEST_CASE("permutation stabilizer invariants follow evenness") {
  CHECK(perm_stabilizer_invariants(Partition{4}, 2) >= 1);
  CHECK(perm_stabilizer_invariants(Partition{3, 1}, 2) == 0);
  CHECK(perm_stabilizer_invariants(Partition{2, 2, 2}, 3) >= 1);
  for (int n = 2; n <= 3; ++n)
    for (const auto& gamma : partitions_of(2 * n, static_cast<std::size_t>(n))) {
      CAPTURE(gamma.to_string());
      CHECK((perm_stabilizer_invariants(gamma, n) > 0) == is_even(gamma));
    }
  CHECK_THROWS_AS(perm_stabilizer_invariants(Partition{3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(perm_stabilizer_invariants(Partition{1, 1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("signed permutation lift agrees on the (2,...,2) weight space") {
  // Negating a row of g rescales one column of Z, and these weight vectors
  // have even degree in every column.
  CHECK(determinant(permutation_matrix({1, 0}, PermutationLift::signed_)) == 1);
  for (int n = 2; n <= 3; ++n)
    for (const auto& gamma : partitions_of(2 * n, static_cast<std::size_t>(n)))
      CHECK(perm_stabilizer_invariants(gamma, n, 200, PermutationLift::signed_) ==
            perm_stabilizer_invariants(gamma, n));
}

TEST_CASE("det and perm are characterized by their symmetries") {
  for (auto kind : {FormKind::determinant, FormKind::permanent})
    for (int size : {2, 3}) {
      const auto r = symmetry_characterization(kind, size);
      CHECK(r.dimension == 1);
      CHECK(r.spans_reference);
    }
  CHECK(symmetry_characterization(FormKind::determinant, 3).ambient_dimension == 165);
  CHECK_THROWS_AS(symmetry_characterization(FormKind::permanent, 4), std::invalid_argument);
}

TEST_CASE("Kempf criterion") {
  for (int n = 2; n <= 4; ++n) {
    const auto v = kempf_irreducibility_check(n);
    CHECK(v.stable);
    CHECK_FALSE(v.degenerate);
  }
  const auto one = kempf_irreducibility_check(1);
  CHECK(one.stable);
  CHECK(one.degenerate);
}
