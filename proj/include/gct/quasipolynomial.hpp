#pragma once

#include "gct/rational.hpp"

#include <cstdint>
#include <vector>

namespace gct {

/// Polynomial in k with rational coefficients, constant term first.
using Polynomial = std::vector<Rational>;

Rational evaluate(const Polynomial& poly, const Rational& k);
/// Drops trailing zero coefficients, keeping at least the constant term.
Polynomial trimmed(Polynomial poly);

/// f(k) = components[k mod period](k).
class QuasiPolynomial {
 public:
  QuasiPolynomial(int period, std::vector<Polynomial> components);

  int period() const { return period_; }
  const std::vector<Polynomial>& components() const { return components_; }
  /// Largest component degree (0 for the zero function).
  int degree() const;

  Rational operator()(std::int64_t k) const;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

 private:
  int period_;
  std::vector<Polynomial> components_;
};

struct FitOptions {
  int max_period = 4;
  int max_degree = 6;
  /// Trailing values used only for verification.
  int holdout = 2;
  /// Leading values ignored, for functions that are quasi-polynomial only
  /// from some k on.
  int skip_prefix = 0;
};

/// Fits values[i] = f(i + 1). Periods are tried in increasing order and each
/// residue class gets the lowest-degree interpolant that reproduces all of
/// its fitting values; the first period whose fit also reproduces the
/// holdout values wins. Throws std::domain_error
/// ("not quasi-polynomial within bounds") when no period up to max_period fits.
QuasiPolynomial fit_quasipolynomial(const std::vector<Rational>& values, const FitOptions& options);
QuasiPolynomial fit_quasipolynomial(const std::vector<std::uint64_t>& values, const FitOptions& options);

}  // namespace gct
