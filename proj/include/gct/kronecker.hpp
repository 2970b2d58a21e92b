#pragma once

#include "gct/partitions.hpp"
#include "gct/quasipolynomial.hpp"
#include "gct/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace gct {

/// Character table of S_n. Rows (irreducibles) and columns (cycle types)
/// both follow partitions_of(n).
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::int64_t value(std::size_t irrep, std::size_t cls) const { return values_[irrep][cls]; }
  const Integer& class_size(std::size_t cls) const { return class_sizes_[cls]; }
  const Integer& group_order() const { return order_; }
  std::size_t index_of(const Partition& p) const;

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::vector<std::vector<std::int64_t>> values_;
  std::vector<Integer> class_sizes_;
  Integer order_;
};

/// Shared, memoized table for S_n.
std::shared_ptr<const CharacterTable> character_table(int n);

/// chi_lambda at cycle type mu (Murnaghan-Nakayama). Throws on size mismatch.
std::int64_t sym_character(const Partition& lambda, const Partition& mu);

/// (1/n!) sum over classes |C| chi_lambda chi_mu chi_nu.
std::uint64_t kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Multiplicity of the SL_m x SL_m-trivial representation in V_lambda(GL_{m^2})
/// restricted along GL_m x GL_m -> GL(C^m (x) C^m): zero unless m divides
/// |lambda|, otherwise kronecker(lambda, R, R) with R the m-row rectangle.
/// Throws when length(lambda) > m^2 or |lambda| exceeds table_cap.
std::uint64_t det_stabilizer_invariant_mult(const Partition& lambda, int m, int table_cap = 14);

struct GStretchSeries {
  Partition lambda;
  int m = 0;
  /// values[k - 1] for k lambda.
  std::vector<std::uint64_t> values;
  std::optional<QuasiPolynomial> fit;
};

/// det_stabilizer_invariant_mult(k lambda, m) for k = 1..max_k, with a
/// quasi-polynomial fit when one exists within the options. Throws
/// std::invalid_argument naming the first k whose size exceeds table_cap.
GStretchSeries g_stretch(const Partition& lambda, int m, int max_k, int table_cap = 14,
                         const FitOptions& options = {});

}  // namespace gct
