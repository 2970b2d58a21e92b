#pragma once

#include "gct/linalg.hpp"
#include "gct/multipoly.hpp"
#include "gct/partitions.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gct {

/// Product over the columns of T of the minor of the generic n x n matrix Z
/// taken on rows 1..(column height) and the columns named by the entries.
MultiPoly deruyts_generator(const Tableau& t, int n);

struct WeylBasisElement {
  Tableau tableau;
  MultiPoly poly;
  std::vector<int> weight;  // content of the tableau, length n
};

/// Polynomial model of the GL_n Weyl module V_lambda inside C[Z], with basis
/// e_T over semistandard T. Immutable after construction.
class WeylModuleModel {
 public:
  /// Throws std::invalid_argument when dim_weyl(lambda, n) exceeds dim_cap
  /// and std::logic_error if the e_T turn out dependent.
  WeylModuleModel(Partition lambda, int n, std::size_t dim_cap = 200);

  const Partition& lambda() const { return lambda_; }
  int n() const { return n_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<WeylBasisElement>& basis() const { return basis_; }

  /// Coordinates of f in the e_T basis. Throws std::logic_error when f is
  /// not in the span.
  RationalVector coordinates(const MultiPoly& f) const;

  /// Columns of the action matrix of f(Z) -> f(Zg) for the listed basis
  /// indices, as a dimension x cols.size() matrix.
  RationalMatrix action_columns(const RationalMatrix& g, const std::vector<std::size_t>& cols) const;

 private:
  Partition lambda_;
  int n_;
  std::vector<WeylBasisElement> basis_;
  std::vector<MultiPoly::Exponent> pivot_monomials_;
  RationalMatrix pivot_inverse_;
};

WeylModuleModel weyl_module(const Partition& lambda, int n, std::size_t dim_cap = 200);

/// Matrix of f(Z) -> f(Zg) in the e_T basis; column j holds the coordinates of
/// the image of e_{T_j}. Throws std::invalid_argument for a singular or
/// wrongly sized g.
RationalMatrix group_action_matrix(const WeylModuleModel& m, const RationalMatrix& g);

/// Index of e_{T0}, T0 having only i's in row i. Verified to span the unique
/// common eigenline of several pseudo-random upper triangular matrices;
/// throws std::logic_error if that check fails.
std::size_t highest_weight_vector(const WeylModuleModel& m);

/// Dimension of the vectors in the given weight space (whole module when
/// weight is empty) fixed by every generator.
std::size_t fixed_subspace_dim(const WeylModuleModel& m, const std::vector<RationalMatrix>& generators,
                               const std::optional<std::vector<int>>& weight = std::nullopt);

/// How the symmetric group is lifted into GL_n.
enum class PermutationLift {
  plain,   // 0/1 permutation matrices
  signed_  // odd permutations get one row negated so that det = 1
};

RationalMatrix permutation_matrix(const std::vector<std::size_t>& perm,
                                  PermutationLift lift = PermutationLift::plain);

/// Multiplicity of invariants of the permutation group (through the chosen
/// lift) in the weight (2,...,2) space of V_gamma(GL_n). Requires
/// |gamma| = 2n and length(gamma) <= n.
std::size_t perm_stabilizer_invariants(const Partition& gamma, int n, std::size_t dim_cap = 200,
                                       PermutationLift lift = PermutationLift::plain);

enum class FormKind { determinant, permanent };

struct SymmetryCharacterization {
  std::size_t dimension = 0;
  /// True when the fixed space is exactly the line through det (or perm).
  bool spans_reference = false;
  /// Size of the ambient space of forms that was searched.
  std::size_t ambient_dimension = 0;
};

/// Computes the space of degree-m forms on m x m matrices sharing the
/// symmetries of det (or perm). Size must be 2 or 3.
SymmetryCharacterization symmetry_characterization(FormKind kind, int size);

inline std::size_t symmetry_characterization_dim(FormKind kind, int size) {
  return symmetry_characterization(kind, size).dimension;
}

struct KempfVerdict {
  bool stable = false;
  bool degenerate = false;
  bool distinct_characters = false;
  bool transitive = false;
};

/// Concrete irreducibility criterion for C^n (x) C^n under the stabilizer of
/// the permanent: distinct torus characters on the coordinates x_ij and a
/// transitive S_n x S_n action on them. n = 1 is reported as degenerate.
KempfVerdict kempf_irreducibility_check(int n);

}  // namespace gct
