#include "gct/weylmod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace gct {

namespace {

// Minor of the n x n matrix with entries entry(r, c) on rows 0..k-1 and the
// given (1-based) columns.
template <typename Entry>
MultiPoly column_minor(const std::vector<int>& cols, std::size_t n, Entry entry) {
  PolyMatrix sub(cols.size(), std::vector<MultiPoly>(cols.size(), MultiPoly(n * n)));
  for (std::size_t r = 0; r < cols.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) sub[r][c] = entry(r, static_cast<std::size_t>(cols[c] - 1));
  return determinant(sub);
}

bool has_repeat(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace

MultiPoly deruyts_generator(const Tableau& t, int n) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  const auto nn = static_cast<std::size_t>(n);
  for (const auto& row : t.rows())
    for (int v : row)
      if (v < 1 || v > n) throw std::invalid_argument("tableau entry outside 1..n");
  MultiPoly out = MultiPoly::constant(nn * nn, 1);
  const std::size_t width = t.shape().length() == 0 ? 0 : static_cast<std::size_t>(t.shape()[0]);
  for (std::size_t c = 0; c < width; ++c) {
    const std::vector<int> col = t.column(c);
    if (has_repeat(col)) return MultiPoly(nn * nn);
    out = out * column_minor(col, nn, [nn](std::size_t r, std::size_t k) {
            return MultiPoly::variable(nn * nn, matrix_var(nn, r, k));
          });
  }
  return out;
}

WeylModuleModel::WeylModuleModel(Partition lambda, int n, std::size_t dim_cap)
    : lambda_(std::move(lambda)), n_(n) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  const std::uint64_t expected = dim_weyl(lambda_, n);
  if (expected > dim_cap)
    throw std::invalid_argument("Weyl module dimension " + std::to_string(expected) + " exceeds budget " +
                                std::to_string(dim_cap));
  for (auto& t : enumerate_ssyt(lambda_, n)) {
    MultiPoly p = deruyts_generator(t, n);
    std::vector<int> w = t.content(n);
    basis_.push_back({std::move(t), std::move(p), std::move(w)});
  }
  if (basis_.size() != expected) throw std::logic_error("SSYT count differs from the hook-content dimension");
  if (basis_.empty()) return;

  std::map<MultiPoly::Exponent, std::size_t> monomial_index;
  for (const auto& b : basis_)
    for (const auto& [e, c] : b.poly.terms()) monomial_index.emplace(e, 0);
  std::vector<MultiPoly::Exponent> monomials;
  for (auto& [e, idx] : monomial_index) {
    idx = monomials.size();
    monomials.push_back(e);
  }
  RationalMatrix coords(basis_.size(), monomials.size());
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (const auto& [e, c] : basis_[j].poly.terms()) coords(j, monomial_index.at(e)) = c;
  RationalMatrix reduced = coords;
  const auto pivots = row_reduce(reduced);
  if (pivots.size() != basis_.size()) throw std::logic_error("Deruyts polynomials are linearly dependent");

  RationalMatrix square(basis_.size(), basis_.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    pivot_monomials_.push_back(monomials[pivots[r]]);
    for (std::size_t j = 0; j < basis_.size(); ++j) square(r, j) = coords(j, pivots[r]);
  }
  auto inv = inverse(square);
  if (!inv) throw std::logic_error("pivot block of the Weyl basis is singular");
  pivot_inverse_ = std::move(*inv);
}

RationalVector WeylModuleModel::coordinates(const MultiPoly& f) const {
  RationalVector rhs(pivot_monomials_.size());
  for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] = f.coefficient(pivot_monomials_[r]);
  RationalVector c = basis_.empty() ? RationalVector{} : pivot_inverse_ * rhs;
  MultiPoly check = f;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (sgn(c[j]) != 0) check -= basis_[j].poly * c[j];
  if (!check.is_zero()) throw std::logic_error("polynomial is not in the span of the Weyl basis");
  return c;
}

RationalMatrix WeylModuleModel::action_columns(const RationalMatrix& g, const std::vector<std::size_t>& cols) const {
  const auto nn = static_cast<std::size_t>(n_);
  if (g.rows() != nn || g.cols() != nn) throw std::invalid_argument("group element has the wrong size");
  if (sgn(determinant(g)) == 0) throw std::invalid_argument("group element is singular");

  // Entries of Zg as linear forms.
  PolyMatrix zg(nn, std::vector<MultiPoly>(nn, MultiPoly(nn * nn)));
  for (std::size_t r = 0; r < nn; ++r)
    for (std::size_t c = 0; c < nn; ++c)
      for (std::size_t k = 0; k < nn; ++k)
        if (sgn(g(k, c)) != 0) zg[r][c] += MultiPoly::variable(nn * nn, matrix_var(nn, r, k)) * g(k, c);

  std::map<std::vector<int>, MultiPoly> minors;
  RationalMatrix out(dimension(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Tableau& t = basis_.at(cols[j]).tableau;
    MultiPoly image = MultiPoly::constant(nn * nn, 1);
    const std::size_t width = static_cast<std::size_t>(t.shape()[0]);
    for (std::size_t c = 0; c < width; ++c) {
      const std::vector<int> col = t.column(c);
      auto it = minors.find(col);
      if (it == minors.end())
        it = minors.emplace(col, column_minor(col, nn, [&zg](std::size_t r, std::size_t k) { return zg[r][k]; }))
                 .first;
      image = image * it->second;
    }
    const RationalVector coords = coordinates(image);
    for (std::size_t i = 0; i < coords.size(); ++i) out(i, j) = coords[i];
  }
  return out;
}

WeylModuleModel weyl_module(const Partition& lambda, int n, std::size_t dim_cap) {
  return WeylModuleModel(lambda, n, dim_cap);
}

RationalMatrix group_action_matrix(const WeylModuleModel& m, const RationalMatrix& g) {
  std::vector<std::size_t> all(m.dimension());
  std::iota(all.begin(), all.end(), 0);
  return m.action_columns(g, all);
}

std::size_t highest_weight_vector(const WeylModuleModel& m) {
  const auto& basis = m.basis();
  std::size_t idx = basis.size();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& rows = basis[j].tableau.rows();
    bool canonical = true;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int v : rows[r]) canonical = canonical && v == static_cast<int>(r) + 1;
    if (canonical) {
      idx = j;
      break;
    }
  }
  if (idx == basis.size()) throw std::logic_error("no canonical tableau in the basis");

  const auto n = static_cast<std::size_t>(m.n());
  const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::mt19937 rng(20240601u);
  std::uniform_int_distribution<int> off(-3, 3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> diag(primes, primes + std::min<std::size_t>(n + 2, std::size(primes)));
    std::shuffle(diag.begin(), diag.end(), rng);
    RationalMatrix b(n, n);
    Rational mu = 1;
    for (std::size_t i = 0; i < n; ++i) {
      b(i, i) = diag[i];
      for (std::size_t j = i + 1; j < n; ++j) b(i, j) = off(rng);
      for (int e = 0; e < m.lambda()[i]; ++e) mu *= diag[i];
    }
    RationalMatrix shifted = group_action_matrix(m, b);
    for (std::size_t i = 0; i < m.dimension(); ++i) shifted(i, i) -= mu;
    const auto kernel = nullspace(shifted);
    bool ok = kernel.size() == 1;
    for (std::size_t i = 0; ok && i < basis.size(); ++i) ok = (sgn(kernel[0][i]) != 0) == (i == idx);
    if (!ok) throw std::logic_error("highest weight vector check failed");
  }
  return idx;
}

std::size_t fixed_subspace_dim(const WeylModuleModel& m, const std::vector<RationalMatrix>& generators,
                               const std::optional<std::vector<int>>& weight) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < m.dimension(); ++j)
    if (!weight || m.basis()[j].weight == *weight) cols.push_back(j);
  if (cols.empty()) return 0;
  std::vector<RationalMatrix> blocks;
  for (const auto& g : generators) {
    RationalMatrix a = m.action_columns(g, cols);
    for (std::size_t c = 0; c < cols.size(); ++c) a(cols[c], c) -= 1;
    blocks.push_back(std::move(a));
  }
  if (blocks.empty()) return cols.size();
  return cols.size() - rank(vstack(blocks));
}

RationalMatrix permutation_matrix(const std::vector<std::size_t>& perm, PermutationLift lift) {
  const std::size_t n = perm.size();
  RationalMatrix p(n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || seen[perm[i]]) throw std::invalid_argument("not a permutation");
    seen[perm[i]] = true;
    p(perm[i], i) = 1;
  }
  if (lift == PermutationLift::signed_ && sgn(determinant(p)) < 0)
    for (std::size_t c = 0; c < n; ++c) p(0, c) = -p(0, c);
  return p;
}

std::size_t perm_stabilizer_invariants(const Partition& gamma, int n, std::size_t dim_cap, PermutationLift lift) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  if (gamma.size() != 2 * n) throw std::invalid_argument("|gamma| must equal 2n");
  if (gamma.length() > static_cast<std::size_t>(n)) throw std::invalid_argument("length(gamma) must be at most n");
  const WeylModuleModel m(gamma, n, dim_cap);
  std::vector<RationalMatrix> gens;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<std::size_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    gens.push_back(permutation_matrix(perm, lift));
  }
  return fixed_subspace_dim(m, gens, std::vector<int>(static_cast<std::size_t>(n), 2));
}

KempfVerdict kempf_irreducibility_check(int n) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  KempfVerdict v;
  if (n == 1) {
    v = {true, true, true, true};
    return v;
  }
  const auto nn = static_cast<std::size_t>(n);
  // Character of x_ij is e_i + f_j on the torus of pairs of diagonal
  // matrices; two characters agree on the stabilizer torus when their
  // difference lies in the span of (1,..,1 | 0,..,0) and (0,..,0 | 1,..,1).
  auto character = [nn](std::size_t i, std::size_t j) {
    std::vector<int> c(2 * nn, 0);
    c[i] = 1;
    c[nn + j] = 1;
    return c;
  };
  v.distinct_characters = true;
  for (std::size_t a = 0; a < nn * nn; ++a)
    for (std::size_t b = a + 1; b < nn * nn; ++b) {
      auto ca = character(a / nn, a % nn);
      const auto cb = character(b / nn, b % nn);
      for (std::size_t k = 0; k < ca.size(); ++k) ca[k] -= cb[k];
      const bool left_const = std::all_of(ca.begin(), ca.begin() + n, [&](int x) { return x == ca[0]; });
      const bool right_const = std::all_of(ca.begin() + n, ca.end(), [&](int x) { return x == ca[nn]; });
      if (left_const && right_const) v.distinct_characters = false;
    }

  std::set<std::pair<std::size_t, std::size_t>> seen{{0, 0}};
  std::vector<std::pair<std::size_t, std::size_t>> frontier{{0, 0}};
  while (!frontier.empty()) {
    auto [i, j] = frontier.back();
    frontier.pop_back();
    for (std::size_t k = 0; k + 1 < nn; ++k) {
      auto swap_index = [k](std::size_t x) { return x == k ? k + 1 : x == k + 1 ? k : x; };
      for (auto next : {std::pair{swap_index(i), j}, std::pair{i, swap_index(j)}})
        if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  v.transitive = seen.size() == nn * nn;
  v.stable = v.distinct_characters && v.transitive;
  return v;
}

}  // namespace gct
