#pragma once

#include "gct/linalg.hpp"
#include "gct/rational.hpp"

#include <optional>

namespace gct {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  /// An optimal point when status is optimal; a feasible point otherwise
  /// when one was found (unbounded case), empty when infeasible.
  RationalVector point;
};

/// Maximizes objective . x subject to a x <= b over free real x, exactly.
///
/// Singleton rows are folded into variable bounds and variables pinned by a
/// pair of opposite bounds are substituted out before the two-phase simplex
/// runs. Pivoting follows Bland's rule, so the result is deterministic and
/// the method cannot cycle.
LpResult maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& objective);

/// Some point of {x : a x <= b}, or nullopt when the system is infeasible.
std::optional<RationalVector> feasible_point(const RationalMatrix& a, const RationalVector& b);

}  // namespace gct
