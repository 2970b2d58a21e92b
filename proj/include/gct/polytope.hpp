#pragma once

#include "gct/linalg.hpp"
#include "gct/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gct {

/// {x in Q^n : a x <= b}.
class Polytope {
 public:
  Polytope(RationalMatrix a, RationalVector b);

  const RationalMatrix& a() const { return a_; }
  const RationalVector& b() const { return b_; }
  std::size_t dimension() const { return a_.cols(); }
  std::size_t num_constraints() const { return a_.rows(); }

  bool contains(const RationalVector& x) const;

 private:
  RationalMatrix a_;
  RationalVector b_;
};

/// The family {x : a x <= k b + c}, k = 0, 1, 2, ...
class ParamPolytope {
 public:
  ParamPolytope(RationalMatrix a, RationalVector b, RationalVector c);
  /// c = 0: plain dilations of {a x <= b}.
  explicit ParamPolytope(const Polytope& p);

  const RationalMatrix& a() const { return a_; }
  const RationalVector& b() const { return b_; }
  const RationalVector& c() const { return c_; }

  Polytope at(std::int64_t k) const;

 private:
  RationalMatrix a_;
  RationalVector b_;
  RationalVector c_;
};

bool feasible(const Polytope& p);

struct CoordinateRange {
  Rational min;
  Rational max;
};

/// Exact per-coordinate extent. Throws std::domain_error("unbounded polytope")
/// if some coordinate is unbounded; nullopt for an empty polytope.
std::optional<std::vector<CoordinateRange>> bounding_box(const Polytope& p);

/// |P cap Z^n| by depth-first search over the integer bounding box with
/// interval propagation through the constraints.
std::uint64_t count_integer_points(const Polytope& p);

/// Lexicographically least point when it exists; otherwise a vertex reached
/// by walking from a feasible point until n independent constraints are
/// tight. Throws std::domain_error for infeasible or non-pointed input.
RationalVector vertex(const Polytope& p);

/// True when x lies in p and the constraints tight at x have rank n.
bool is_vertex(const Polytope& p, const RationalVector& x);

/// Counts for at(1), ..., at(max_k).
std::vector<std::uint64_t> ehrhart_counts(const ParamPolytope& pp, int max_k);

struct IntegralDilation {
  Integer k;
  std::vector<Integer> point;
};

/// k = lcm of the denominators of a vertex v, with the integer point k v of k P.
IntegralDilation smallest_integral_dilation(const Polytope& p);
/// Same, for a caller-chosen vertex (validated).
IntegralDilation smallest_integral_dilation(const Polytope& p, const RationalVector& chosen_vertex);

}  // namespace gct
