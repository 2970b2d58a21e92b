#include "gct/lr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace gct {

namespace {

std::size_t point_index(std::size_t i, std::size_t j) { return i * (i + 1) / 2 + j; }

std::vector<Rational> partial_sums(const Partition& p, std::size_t n, int offset) {
  std::vector<Rational> out(n + 1);
  int acc = offset;
  out[0] = acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc += p[i];
    out[i + 1] = acc;
  }
  return out;
}

}  // namespace

Polytope hive_polytope(const LRQuery& q, std::optional<std::size_t> side) {
  if (!q.sizes_match())
    throw std::invalid_argument("hive: |lambda| = " + std::to_string(q.lambda.size()) + " but |alpha| + |beta| = " +
                                std::to_string(q.alpha.size() + q.beta.size()));
  const std::size_t longest = std::max({q.alpha.length(), q.beta.length(), q.lambda.length(), std::size_t{1}});
  const std::size_t n = side.value_or(longest);
  if (n < longest) throw std::invalid_argument("hive side shorter than a partition");

  const std::size_t vars = point_index(n, n) + 1;
  std::vector<RationalVector> rows;
  RationalVector rhs;
  auto pin = [&](std::size_t i, std::size_t j, const Rational& value) {
    RationalVector up(vars), down(vars);
    up[point_index(i, j)] = 1;
    down[point_index(i, j)] = -1;
    rows.push_back(std::move(up));
    rhs.push_back(value);
    rows.push_back(std::move(down));
    rhs.push_back(-value);
  };

  const auto left = partial_sums(q.alpha, n, 0);
  const auto bottom = partial_sums(q.beta, n, q.alpha.size());
  const auto right = partial_sums(q.lambda, n, 0);
  pin(0, 0, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    pin(i, 0, left[i]);
    pin(i, i, right[i]);
  }
  for (std::size_t j = 1; j < n; ++j) pin(n, j, bottom[j]);

  auto inside = [n](long i, long j) { return i >= 0 && j >= 0 && j <= i && i <= static_cast<long>(n); };
  // Each interior edge p-q bounds two unit triangles with apexes r and s;
  // the rhombus condition is h(r) + h(s) <= h(p) + h(q).
  struct Dir {
    long di, dj;
    long ri, rj, si, sj;  // apex offsets relative to p
  };
  const Dir dirs[] = {{0, 1, -1, 0, 1, 1}, {1, 0, 0, -1, 1, 1}, {1, 1, 0, 1, 1, 0}};
  for (long i = 0; i <= static_cast<long>(n); ++i) {
    for (long j = 0; j <= i; ++j) {
      for (const auto& d : dirs) {
        const long qi = i + d.di, qj = j + d.dj;
        const long ri = i + d.ri, rj = j + d.rj;
        const long si = i + d.si, sj = j + d.sj;
        if (!inside(qi, qj) || !inside(ri, rj) || !inside(si, sj)) continue;
        RationalVector row(vars);
        row[point_index(static_cast<std::size_t>(ri), static_cast<std::size_t>(rj))] += 1;
        row[point_index(static_cast<std::size_t>(si), static_cast<std::size_t>(sj))] += 1;
        row[point_index(static_cast<std::size_t>(i), static_cast<std::size_t>(j))] -= 1;
        row[point_index(static_cast<std::size_t>(qi), static_cast<std::size_t>(qj))] -= 1;
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
      }
    }
  }
  return Polytope(RationalMatrix::from_rows(rows), std::move(rhs));
}

std::uint64_t lr_tableau_count(const LRQuery& q) {
  if (!q.sizes_match() || !q.lambda.contains(q.alpha) || !q.lambda.contains(q.beta)) return 0;
  const std::size_t rows = q.lambda.length();
  const std::size_t letters = q.beta.length();
  // Cells in reverse reading order: rows top to bottom, each right to left.
  struct Cell {
    std::size_t r;
    int c;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < rows; ++r)
    for (int c = q.lambda[r] - 1; c >= q.alpha[r]; --c) cells.push_back({r, c});

  std::vector<std::vector<int>> grid(rows);
  for (std::size_t r = 0; r < rows; ++r) grid[r].assign(static_cast<std::size_t>(q.lambda[r]), 0);
  std::vector<int> used(letters + 1, 0);
  std::uint64_t total = 0;

  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    const auto [r, c] = cells[idx];
    int hi = static_cast<int>(letters);
    if (c + 1 < q.lambda[r]) hi = std::min(hi, grid[r][static_cast<std::size_t>(c + 1)]);
    int lo = 1;
    if (r > 0 && c >= q.alpha[r - 1]) lo = grid[r - 1][static_cast<std::size_t>(c)] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto vv = static_cast<std::size_t>(v);
      if (used[vv] == q.beta[vv - 1]) continue;
      if (v > 1 && used[vv] + 1 > used[vv - 1]) continue;  // lattice condition
      ++used[vv];
      grid[r][static_cast<std::size_t>(c)] = v;
      place(idx + 1);
      grid[r][static_cast<std::size_t>(c)] = 0;
      --used[vv];
    }
  };
  place(0);
  return total;
}

LRCount lr_coefficient_detail(const LRQuery& q) {
  if (!q.sizes_match()) return {};
  LRCount out{lr_tableau_count(q), count_integer_points(hive_polytope(q))};
  if (out.tableau != out.hive)
    throw std::logic_error("oracle mismatch for (" + q.alpha.to_string() + "; " + q.beta.to_string() + "; " +
                           q.lambda.to_string() + "): tableau " + std::to_string(out.tableau) + ", hive " +
                           std::to_string(out.hive));
  return out;
}

std::uint64_t lr_coefficient(const LRQuery& q) { return lr_coefficient_detail(q).tableau; }

bool lr_positive(const LRQuery& q) {
  if (!q.sizes_match()) return false;
  return feasible(hive_polytope(q));
}

StretchSeries lr_stretch(const LRQuery& q, int max_k, const FitOptions& options) {
  if (max_k < 4) throw std::invalid_argument("stretch needs at least 4 values");
  StretchSeries series{q, {}, std::nullopt};
  if (!q.sizes_match()) {
    series.values.assign(static_cast<std::size_t>(max_k), 0);
    series.fit = fit_quasipolynomial(series.values, options);
    return series;
  }
  const Polytope base = hive_polytope(q);
  const std::size_t side = std::max({q.alpha.length(), q.beta.length(), q.lambda.length(), std::size_t{1}});
  for (int k = 1; k <= max_k; ++k) {
    const Polytope scaled = hive_polytope(q.scaled(k), side);
    const Polytope dilated = ParamPolytope(base).at(k);
    if (!(scaled.a() == dilated.a()) || scaled.b() != dilated.b())
      throw std::logic_error("scaled hive polytope is not the dilation of the base hive polytope");
    series.values.push_back(count_integer_points(scaled));
  }
  series.fit = fit_quasipolynomial(series.values, options);
  return series;
}

}  // namespace gct
