#pragma once

#include "gct/partitions.hpp"
#include "gct/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace gct {

/// Symmetric polynomial in num_vars variables, stored in the monomial
/// symmetric basis: terms[mu] is the coefficient of m_mu (equivalently of
/// the single monomial x^mu).
class SymPoly {
 public:
  explicit SymPoly(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Degree when every term has the same size; nullopt otherwise or when zero.
  std::optional<int> homogeneous_degree() const;

  /// Coefficient of x^exponents for any exponent vector (order irrelevant).
  Rational coefficient(std::span<const int> exponents) const;
  Rational coefficient(const Partition& mu) const;

  /// Adds c to the coefficient of m_mu; zero results are erased.
  void add(const Partition& mu, const Rational& c);

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly operator*(const Rational& c) const;
  friend SymPoly operator*(const SymPoly& f, const SymPoly& g);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  int num_vars_;
  std::map<Partition, Rational> terms_;
};

using SchurExpansion = std::map<Partition, Rational>;
using Multiplicities = std::map<Partition, std::uint64_t>;

/// s_lambda(x_1..x_n) as the content generating function of SSYT.
SymPoly schur(const Partition& lambda, int num_vars);

/// Coefficients in the Schur basis by peeling off lexicographically leading
/// monomials. Throws std::invalid_argument for nonhomogeneous input.
SchurExpansion schur_expand(const SymPoly& f);

/// s_alpha * s_beta in the Schur basis (Littlewood-Richardson coefficients).
Multiplicities product_expand(const Partition& alpha, const Partition& beta);

/// s_pi[s_mu] in the Schur basis, by substituting the monomials of s_mu into
/// s_pi. Throws std::invalid_argument when |pi| |mu| exceeds degree_cap.
Multiplicities plethysm_expand(const Partition& pi, const Partition& mu, int degree_cap = 10);

/// Converts an expansion with nonnegative integral coefficients; throws
/// std::logic_error otherwise.
Multiplicities to_multiplicities(const SchurExpansion& expansion);

}  // namespace gct
