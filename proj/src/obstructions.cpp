#include "gct/obstructions.hpp"

#include "gct/linalg.hpp"
#include "gct/weylmod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace gct {

MagicSquare::MagicSquare(std::vector<std::vector<int>> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw std::invalid_argument("magic square must be nonempty");
  for (const auto& row : entries_) {
    if (row.size() != n) throw std::invalid_argument("magic square must be square");
    for (int v : row)
      if (v < 0) throw std::invalid_argument("magic square entries must be nonnegative");
  }
  weight_ = std::accumulate(entries_[0].begin(), entries_[0].end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    int row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += entries_[i][j];
      col += entries_[j][i];
    }
    if (row != weight_ || col != weight_) throw std::invalid_argument("row and column sums differ");
  }
}

MultiPoly::Exponent MagicSquare::exponent() const {
  MultiPoly::Exponent e;
  for (const auto& row : entries_) e.insert(e.end(), row.begin(), row.end());
  return e;
}

namespace {

// Sorting columns as vectors gives the row-major minimum for a fixed row order.
std::vector<std::vector<int>> sort_columns(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<int>> cols(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j][i] = m[i][j];
  std::sort(cols.begin(), cols.end());
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = cols[j][i];
  return out;
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void compositions(int total, std::size_t parts, const std::vector<int>& limit, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  const std::size_t i = cur.size();
  if (i + 1 == parts) {
    if (total <= limit[i]) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int v = 0; v <= std::min(total, limit[i]); ++v) {
    cur.push_back(v);
    compositions(total - v, parts, limit, cur, out);
    cur.pop_back();
  }
}

void fill_rows(std::size_t n, int r, std::vector<int>& col_left, std::vector<std::vector<int>>& rows,
               std::vector<MagicSquare>& out) {
  if (rows.size() + 1 == n) {
    rows.push_back(col_left);
    out.emplace_back(rows);
    rows.pop_back();
    return;
  }
  std::vector<std::vector<int>> choices;
  std::vector<int> cur;
  compositions(r, n, col_left, cur, choices);
  for (const auto& row : choices) {
    for (std::size_t j = 0; j < n; ++j) col_left[j] -= row[j];
    rows.push_back(row);
    fill_rows(n, r, col_left, rows, out);
    rows.pop_back();
    for (std::size_t j = 0; j < n; ++j) col_left[j] += row[j];
  }
}

}  // namespace

MagicSquare MagicSquare::canonical_form() const {
  const std::size_t n = entries_.size();
  std::vector<std::vector<int>> best;
  for (const auto& perm : all_permutations(n)) {
    std::vector<std::vector<int>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = entries_[perm[i]];
    auto candidate = sort_columns(rows);
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return MagicSquare(std::move(best));
}

MagicSquareEnumeration enumerate_magic_squares(int n, int r, int weight_cap) {
  if (n < 1 || n > 4) throw std::invalid_argument("magic square size must be in 1..4");
  if (r < 0) throw std::invalid_argument("weight must be nonnegative");
  if (r > weight_cap)
    throw std::invalid_argument("weight " + std::to_string(r) + " exceeds cap " + std::to_string(weight_cap));
  MagicSquareEnumeration out;
  const auto nn = static_cast<std::size_t>(n);
  std::vector<int> col_left(nn, r);
  std::vector<std::vector<int>> rows;
  fill_rows(nn, r, col_left, rows, out.squares);
  std::set<MagicSquare> reps;
  for (const auto& sq : out.squares) reps.insert(sq.canonical_form());
  out.orbit_representatives.assign(reps.begin(), reps.end());
  return out;
}

MultiPoly basic_invariant_poly(const MagicSquare& a) {
  const std::size_t n = a.n();
  const auto perms = all_permutations(n);
  std::set<MultiPoly::Exponent> orbit;
  for (const auto& rp : perms)
    for (const auto& cp : perms) {
      MultiPoly::Exponent e(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[matrix_var(n, i, j)] = a.at(rp[i], cp[j]);
      orbit.insert(std::move(e));
    }
  MultiPoly p(n * n);
  for (const auto& e : orbit) p.add_term(e, 1);
  return p;
}

namespace {

void all_exponents(std::size_t var, int remaining, MultiPoly::Exponent& cur, std::vector<MultiPoly::Exponent>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[var] = e;
    all_exponents(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

// Dimension of the degree nr polynomials invariant under the torus and the
// permutations of rows and columns, without using magic square enumeration.
std::size_t invariant_space_dim(std::size_t n, int r) {
  std::vector<MultiPoly::Exponent> all;
  MultiPoly::Exponent cur(n * n, 0);
  all_exponents(0, static_cast<int>(n) * r, cur, all);
  std::vector<MultiPoly::Exponent> basis;
  for (const auto& e : all) {
    std::vector<int> rows(n, 0), cols(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        rows[i] += e[matrix_var(n, i, j)];
        cols[j] += e[matrix_var(n, i, j)];
      }
    const bool balanced = std::all_of(rows.begin(), rows.end(), [&](int x) { return x == rows[0]; }) &&
                          std::all_of(cols.begin(), cols.end(), [&](int x) { return x == cols[0]; });
    if (balanced) basis.push_back(e);
  }
  std::map<MultiPoly::Exponent, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  std::vector<RationalMatrix> blocks;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (bool swap_rows : {true, false}) {
      RationalMatrix block(basis.size(), basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        MultiPoly::Exponent moved(n * n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const std::size_t ii = swap_rows ? (i == k ? k + 1 : i == k + 1 ? k : i) : i;
            const std::size_t jj = swap_rows ? j : (j == k ? k + 1 : j == k + 1 ? k : j);
            moved[matrix_var(n, ii, jj)] = basis[c][matrix_var(n, i, j)];
          }
        block(index.at(moved), c) += 1;
        block(c, c) -= 1;
      }
      blocks.push_back(std::move(block));
    }
  }
  if (blocks.empty()) return basis.size();
  return basis.size() - rank(vstack(blocks));
}

}  // namespace

InvariantDimensionReport invariant_dimension_report(int n, int r) {
  if (n < 1 || n > 3) throw std::invalid_argument("invariant dimension check supports n in 1..3");
  if (r < 0) throw std::invalid_argument("weight must be nonnegative");
  const auto nn = static_cast<std::size_t>(n);
  const auto enumeration = enumerate_magic_squares(n, r, std::max(r, 6));
  InvariantDimensionReport report;
  report.orbit_count = enumeration.orbit_count();

  std::map<MultiPoly::Exponent, std::size_t> monomials;
  std::vector<MultiPoly> polys;
  for (const auto& rep : enumeration.orbit_representatives) {
    polys.push_back(basic_invariant_poly(rep));
    for (const auto& [e, c] : polys.back().terms()) monomials.emplace(e, monomials.size());
  }
  RationalMatrix coeffs(polys.size(), monomials.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [e, c] : polys[i].terms()) coeffs(i, monomials.at(e)) = c;
  report.basic_invariant_rank = polys.empty() ? 0 : rank(coeffs);
  report.fixed_space_dim = invariant_space_dim(nn, r);

  if (report.basic_invariant_rank != report.orbit_count || report.orbit_count != report.fixed_space_dim)
    throw std::logic_error("invariant dimension mismatch for n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                           ": " + std::to_string(report.orbit_count) + " orbits, rank " +
                           std::to_string(report.basic_invariant_rank) + ", fixed space " +
                           std::to_string(report.fixed_space_dim));
  return report;
}

bool invariant_ring_dimension_check(int n, int r) {
  invariant_dimension_report(n, r);
  return true;
}

bool trace_like_invariance_check(int n, int j, int trials, unsigned seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (j < 0) throw std::invalid_argument("power must be nonnegative");
  const auto nn = static_cast<std::size_t>(n);
  const PolyMatrix x = symbolic_matrix(nn);
  auto power_trace = [nn](const PolyMatrix& m, int k) {
    PolyMatrix acc(nn, std::vector<MultiPoly>(nn, MultiPoly(nn * nn)));
    for (std::size_t i = 0; i < nn; ++i) acc[i][i] = MultiPoly::constant(nn * nn, 1);
    for (int step = 0; step < k; ++step) acc = multiply(acc, m);
    return trace(acc);
  };
  const MultiPoly expected = power_trace(x, j);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  for (int t = 0; t < trials; ++t) {
    RationalMatrix a(nn, nn);
    std::optional<RationalMatrix> a_inv;
    while (!a_inv) {
      for (std::size_t r = 0; r < nn; ++r)
        for (std::size_t c = 0; c < nn; ++c) {
          a(r, c) = Rational(num(rng), den(rng));
          a(r, c).canonicalize();
        }
      a_inv = inverse(a);
    }
    const PolyMatrix conj = multiply(multiply(a, x), *a_inv);
    if (power_trace(conj, j) != expected) return false;
  }
  return true;
}

std::size_t certificate_bitlength(int n, const Partition& gamma) {
  auto bits = [](long v) {
    std::size_t b = 1;
    while (v > 1) {
      v >>= 1;
      ++b;
    }
    return b;
  };
  std::size_t total = bits(n);
  for (std::size_t i = 0; i < gamma.length(); ++i) total += bits(gamma[i]);
  return total;
}

ObstructionCertificate verify_obstruction(ObstructionCertificate cert, bool full) {
  if (cert.n < 1) throw std::invalid_argument("n must be positive");
  if (cert.gamma.size() != 2 * cert.n) throw std::invalid_argument("|gamma| must equal 2n");
  cert.checks.even = is_even(cert.gamma);
  if (!cert.checks.even) throw std::domain_error("not an obstruction: even");
  // The first tensor factor is trivial, so alpha is empty while gamma is not.
  cert.checks.alpha_neq_beta = cert.gamma.length() > 0;
  if (!cert.checks.alpha_neq_beta) throw std::domain_error("not an obstruction: alpha_neq_beta");
  cert.checks.invariant_dim.reset();
  if (full && cert.n <= 3) {
    cert.checks.invariant_dim = perm_stabilizer_invariants(cert.gamma, cert.n);
    if (*cert.checks.invariant_dim == 0) throw std::domain_error("not an obstruction: invariant_dim");
  }
  cert.bitlength = certificate_bitlength(cert.n, cert.gamma);
  return cert;
}

std::vector<ObstructionCertificate> emit_obstruction_family(int max_n, bool full) {
  std::vector<ObstructionCertificate> out;
  for (int n = 2; n <= max_n; ++n) {
    ObstructionCertificate cert;
    cert.n = n;
    cert.gamma = Partition{2 * n};
    out.push_back(verify_obstruction(std::move(cert), full));
  }
  return out;
}

}  // namespace gct
