#include "gct/lp.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace gct {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense simplex tableau over y >= 0 for rows  M y = rhs, rhs >= 0.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows, RationalVector(cols + 1)), basis_(rows, kNone) {}

  Rational& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  Rational& rhs(std::size_t r) { return rows_[r].back(); }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return rows_.empty() ? 0 : rows_.front().size() - 1; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c, RationalVector& objective) {
    RationalVector& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    for (auto& v : prow) {
      if (sgn(v) != 0) v *= inv;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      eliminate(rows_[i], prow, c);
    }
    if (sgn(objective[c]) != 0) eliminate(objective, prow, c);
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Maximizes with the reduced-cost row `objective` (entry j holds -c_j after
  // elimination; last entry holds the current value). Columns at or beyond
  // `allowed` never enter. Returns false on unboundedness.
  bool optimize(RationalVector& objective, std::size_t allowed) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(objective[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i].back() / rows_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter, objective);
    }
  }

 private:
  static void eliminate(RationalVector& target, const RationalVector& prow, std::size_t c) {
    const Rational factor = target[c];
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (sgn(prow[j]) != 0) target[j] -= factor * prow[j];
    }
  }

  std::vector<RationalVector> rows_;
  std::vector<std::size_t> basis_;
};

struct Reduced {
  RationalMatrix a;
  RationalVector b;
  std::vector<std::size_t> free_vars;   // original indices of remaining columns
  RationalVector fixed_value;           // value for pinned variables
  std::vector<bool> pinned;
  bool infeasible = false;
};

// Folds singleton rows into bounds and substitutes pinned variables until
// nothing changes.
Reduced presolve(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.cols();
  Reduced out;
  out.pinned.assign(n, false);
  out.fixed_value.assign(n, Rational(0));
  std::vector<std::optional<Rational>> lower(n), upper(n);
  std::vector<bool> row_alive(a.rows(), true);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!row_alive[i]) continue;
      std::size_t only = kNone;
      std::size_t count = 0;
      Rational rhs = b[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a(i, j)) == 0) continue;
        if (out.pinned[j]) {
          rhs -= a(i, j) * out.fixed_value[j];
        } else {
          ++count;
          only = j;
        }
      }
      if (count == 0) {
        if (sgn(rhs) < 0) {
          out.infeasible = true;
          return out;
        }
        row_alive[i] = false;
        continue;
      }
      if (count != 1) continue;
      const Rational bound = rhs / a(i, only);
      if (sgn(a(i, only)) > 0) {
        if (!upper[only] || bound < *upper[only]) upper[only] = bound;
      } else {
        if (!lower[only] || bound > *lower[only]) lower[only] = bound;
      }
      if (lower[only] && upper[only]) {
        if (*lower[only] > *upper[only]) {
          out.infeasible = true;
          return out;
        }
        if (*lower[only] == *upper[only]) {
          out.pinned[only] = true;
          out.fixed_value[only] = *lower[only];
          changed = true;
        }
      }
    }
  }

  for (std::size_t j = 0; j < n; ++j)
    if (!out.pinned[j]) out.free_vars.push_back(j);
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RationalVector row;
    Rational rhs = b[i];
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (out.pinned[j]) {
        rhs -= a(i, j) * out.fixed_value[j];
      }
    }
    for (auto j : out.free_vars) {
      row.push_back(a(i, j));
      if (sgn(a(i, j)) != 0) any = true;
    }
    if (!any) {
      if (sgn(rhs) < 0) {
        out.infeasible = true;
        return out;
      }
      continue;
    }
    rows.push_back(std::move(row));
    out.b.push_back(rhs);
  }
  out.a = rows.empty() ? RationalMatrix(0, out.free_vars.size()) : RationalMatrix::from_rows(rows);
  return out;
}

// Two-phase simplex on the presolved system. Column layout: x+ (n), x- (n),
// slacks (m), artificials.
LpResult simplex(const RationalMatrix& a, const RationalVector& b, const RationalVector& objective) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::size_t> artificial_row;
  for (std::size_t i = 0; i < m; ++i)
    if (sgn(b[i]) < 0) artificial_row.push_back(i);
  const std::size_t real_cols = 2 * n + m;
  const std::size_t cols = real_cols + artificial_row.size();
  Tableau t(m, cols);
  std::size_t next_art = real_cols;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    const int s = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      t.at(i, j) = s * a(i, j);
      t.at(i, n + j) = -s * a(i, j);
    }
    t.at(i, 2 * n + i) = s;
    t.rhs(i) = s * b[i];
    if (flip) {
      t.at(i, next_art) = 1;
      t.basis()[i] = next_art++;
    } else {
      t.basis()[i] = 2 * n + i;
    }
  }

  if (!artificial_row.empty()) {
    RationalVector phase1(cols + 1);
    for (std::size_t j = real_cols; j < cols; ++j) phase1[j] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis()[i] < real_cols) continue;
      for (std::size_t j = 0; j <= cols; ++j) {
        Rational v = j == cols ? t.rhs(i) : t.at(i, j);
        if (sgn(v) != 0) phase1[j] -= v;
      }
    }
    t.optimize(phase1, cols);
    if (sgn(phase1[cols]) != 0) return {LpStatus::infeasible, 0, {}};
    // Drive zero-level artificials out, or drop their rows as redundant.
    for (std::size_t i = 0; i < t.num_rows();) {
      if (t.basis()[i] < real_cols) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < real_cols; ++j) {
        if (sgn(t.at(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col == kNone) {
        t.drop_row(i);
      } else {
        t.pivot(i, col, phase1);
        ++i;
      }
    }
  }

  RationalVector reduced(cols + 1);
  for (std::size_t j = 0; j < n; ++j) {
    reduced[j] = -objective[j];
    reduced[n + j] = objective[j];
  }
  for (std::size_t i = 0; i < t.num_rows(); ++i) {
    const std::size_t bcol = t.basis()[i];
    if (sgn(reduced[bcol]) == 0) continue;
    const Rational factor = reduced[bcol];
    for (std::size_t j = 0; j <= cols; ++j) {
      Rational v = j == cols ? t.rhs(i) : t.at(i, j);
      if (sgn(v) != 0) reduced[j] -= factor * v;
    }
  }
  const bool bounded = t.optimize(reduced, real_cols);

  RationalVector y(cols, Rational(0));
  for (std::size_t i = 0; i < t.num_rows(); ++i) y[t.basis()[i]] = t.rhs(i);
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
  if (!bounded) return {LpStatus::unbounded, 0, x};
  return {LpStatus::optimal, reduced[cols], x};
}

}  // namespace

LpResult maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& objective) {
  if (a.rows() != b.size() || a.cols() != objective.size())
    throw std::invalid_argument("linear program shape mismatch");
  const Reduced red = presolve(a, b);
  if (red.infeasible) return {LpStatus::infeasible, 0, {}};

  RationalVector reduced_objective;
  Rational offset = 0;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (red.pinned[j]) offset += objective[j] * red.fixed_value[j];
  for (auto j : red.free_vars) reduced_objective.push_back(objective[j]);

  LpResult inner = simplex(red.a, red.b, reduced_objective);
  LpResult out{inner.status, inner.value + offset, {}};
  if (inner.status == LpStatus::infeasible) return out;
  out.point = red.fixed_value;
  for (std::size_t k = 0; k < red.free_vars.size(); ++k) out.point[red.free_vars[k]] = inner.point[k];
  return out;
}

std::optional<RationalVector> feasible_point(const RationalMatrix& a, const RationalVector& b) {
  const LpResult r = maximize(a, b, RationalVector(a.cols()));
  if (r.status == LpStatus::infeasible) return std::nullopt;
  return r.point;
}

}  // namespace gct
