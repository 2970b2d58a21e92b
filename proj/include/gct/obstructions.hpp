#pragma once

#include "gct/multipoly.hpp"
#include "gct/partitions.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gct {

/// n x n matrix of nonnegative integers whose rows and columns all sum to
/// the weight.
class MagicSquare {
 public:
  /// Throws std::invalid_argument if the matrix is not square or the line
  /// sums are not all equal.
  explicit MagicSquare(std::vector<std::vector<int>> entries);

  std::size_t n() const { return entries_.size(); }
  int weight() const { return weight_; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }
  int at(std::size_t r, std::size_t c) const { return entries_[r][c]; }

  /// Exponent vector of the monomial x^A in n^2 variables (row-major).
  MultiPoly::Exponent exponent() const;

  /// Lexicographically smallest matrix in the row/column permutation orbit.
  MagicSquare canonical_form() const;

  friend auto operator<=>(const MagicSquare&, const MagicSquare&) = default;

 private:
  std::vector<std::vector<int>> entries_;
  int weight_ = 0;
};

struct MagicSquareEnumeration {
  std::vector<MagicSquare> squares;               // row-major lexicographic order
  std::vector<MagicSquare> orbit_representatives;  // canonical forms, sorted
  std::size_t orbit_count() const { return orbit_representatives.size(); }
};

/// All magic squares of size n <= 4 and weight r <= weight_cap.
MagicSquareEnumeration enumerate_magic_squares(int n, int r, int weight_cap = 6);

/// Sum of x^{A'} over the distinct row/column permutations A' of A.
MultiPoly basic_invariant_poly(const MagicSquare& a);

struct InvariantDimensionReport {
  std::size_t orbit_count = 0;
  std::size_t basic_invariant_rank = 0;
  std::size_t fixed_space_dim = 0;
};

/// Compares the basic invariants p_A of weight r against the dimension of the
/// degree nr invariants computed from scratch as the fixed space of the
/// permutation action on torus-invariant monomials. Throws std::logic_error
/// with both numbers when they disagree. Requires n <= 3.
InvariantDimensionReport invariant_dimension_report(int n, int r);
bool invariant_ring_dimension_check(int n, int r);

/// Checks trace((A X A^-1)^j) == trace(X^j) symbolically for `trials`
/// pseudo-random invertible rational A.
bool trace_like_invariance_check(int n, int j, int trials, unsigned seed = 1);

struct ObstructionChecks {
  bool even = false;
  bool alpha_neq_beta = false;
  std::optional<std::size_t> invariant_dim;
};

struct ObstructionCertificate {
  int n = 0;
  Partition gamma;
  ObstructionChecks checks;
  /// Bits needed to write n and the parts of gamma in binary.
  std::size_t bitlength = 0;
};

std::size_t certificate_bitlength(int n, const Partition& gamma);

/// Fills in the checks. Throws std::invalid_argument when |gamma| != 2n and
/// std::domain_error("not an obstruction: <check>") when a check fails. With
/// `full` and n <= 3 the invariant multiplicity is also computed.
ObstructionCertificate verify_obstruction(ObstructionCertificate cert, bool full);

/// Certificates for gamma_n = (2n), n = 2..max_n, each already verified.
std::vector<ObstructionCertificate> emit_obstruction_family(int max_n, bool full = false);

}  // namespace gct
