#pragma once

#include "gct/partitions.hpp"
#include "gct/polytope.hpp"
#include "gct/quasipolynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gct {

/// Asks for the multiplicity of V_lambda in V_alpha (x) V_beta.
struct LRQuery {
  Partition alpha;
  Partition beta;
  Partition lambda;

  bool sizes_match() const { return lambda.size() == alpha.size() + beta.size(); }
  LRQuery scaled(int k) const { return {alpha.scaled(k), beta.scaled(k), lambda.scaled(k)}; }
};

/// Hive on a triangular array of side n: one variable per lattice point
/// (i, j), 0 <= j <= i <= n, boundary labels pinned by paired inequalities
/// to partial sums of alpha (left edge), beta (bottom edge) and lambda
/// (right edge), and one rhombus inequality per interior edge.
///
/// n defaults to the longest of the three partitions. Throws
/// std::invalid_argument on a size mismatch or when n is too small.
Polytope hive_polytope(const LRQuery& q, std::optional<std::size_t> side = std::nullopt);

/// Number of LR skew tableaux of shape lambda/alpha and content beta whose
/// reverse reading word is a lattice word.
std::uint64_t lr_tableau_count(const LRQuery& q);

struct LRCount {
  std::uint64_t tableau = 0;
  std::uint64_t hive = 0;
};

/// Both counts; throws std::logic_error("oracle mismatch ...") if they differ.
LRCount lr_coefficient_detail(const LRQuery& q);
std::uint64_t lr_coefficient(const LRQuery& q);

/// Nonvanishing via exact LP feasibility of the hive polytope only.
bool lr_positive(const LRQuery& q);

struct StretchSeries {
  LRQuery query;
  /// values[k - 1] = c at (k alpha, k beta, k lambda).
  std::vector<std::uint64_t> values;
  std::optional<QuasiPolynomial> fit;
};

/// Hive counts for k = 1..max_k plus a quasi-polynomial fit. Also checks that
/// the hive polytope of the scaled query is the k-dilate of the unscaled one.
StretchSeries lr_stretch(const LRQuery& q, int max_k, const FitOptions& options = {});

}  // namespace gct
