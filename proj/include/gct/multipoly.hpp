#pragma once

#include "gct/linalg.hpp"
#include "gct/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gct {

/// Sparse polynomial with exact coefficients over a fixed number of
/// variables. Terms are kept in exponent order with no zero coefficients.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;

  explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& c);
  static MultiPoly variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Replaces variable i by images[i].
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// Renames variable i to perm[i].
  MultiPoly permute_variables(const std::vector<std::size_t>& perm) const;

  /// Terms joined with " + " / " - ", each as coefficient then
  /// name^power factors separated by '*'; "0" for the zero polynomial.
  std::string to_string(const std::function<std::string(std::size_t)>& name) const;

 private:
  std::size_t num_vars_;
  std::map<Exponent, Rational> terms_;
};

/// Variable index of entry (row, col) of an n x n symbolic matrix.
inline std::size_t matrix_var(std::size_t n, std::size_t row, std::size_t col) { return row * n + col; }

/// Names "z11", "z12", ... (1-based) for an n x n symbolic matrix.
std::function<std::string(std::size_t)> matrix_var_names(std::size_t n, char letter = 'z');

/// Square matrix of polynomials, used for symbolic matrix identities.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// The generic n x n matrix (x_ij).
PolyMatrix symbolic_matrix(std::size_t n);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix multiply(const RationalMatrix& a, const PolyMatrix& b);
PolyMatrix multiply(const PolyMatrix& a, const RationalMatrix& b);
MultiPoly trace(const PolyMatrix& m);
/// Leibniz expansion; fine for the small sizes used here.
MultiPoly determinant(const PolyMatrix& m);
MultiPoly permanent(const PolyMatrix& m);

}  // namespace gct
