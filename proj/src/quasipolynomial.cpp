#include "gct/quasipolynomial.hpp"

#include "gct/linalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gct {

Rational evaluate(const Polynomial& poly, const Rational& k) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * k + *it;
  return acc;
}

Polynomial trimmed(Polynomial poly) {
  while (poly.size() > 1 && sgn(poly.back()) == 0) poly.pop_back();
  if (poly.empty()) poly.emplace_back(0);
  return poly;
}

QuasiPolynomial::QuasiPolynomial(int period, std::vector<Polynomial> components)
    : period_(period), components_(std::move(components)) {
  if (period_ < 1 || components_.size() != static_cast<std::size_t>(period_))
    throw std::invalid_argument("quasi-polynomial needs one component per residue");
  for (auto& c : components_) c = trimmed(std::move(c));
}

int QuasiPolynomial::degree() const {
  int d = 0;
  for (const auto& c : components_) d = std::max(d, static_cast<int>(c.size()) - 1);
  return d;
}

Rational QuasiPolynomial::operator()(std::int64_t k) const {
  const auto r = static_cast<std::size_t>(((k % period_) + period_) % period_);
  return evaluate(components_[r], Rational(static_cast<long>(k)));
}

namespace {

struct Sample {
  std::int64_t k;
  Rational value;
};

// Interpolant through the first `count` samples (Vandermonde solve).
Polynomial interpolate(const std::vector<Sample>& samples, std::size_t count) {
  RationalMatrix system(count, count + 1);
  for (std::size_t i = 0; i < count; ++i) {
    Rational power = 1;
    for (std::size_t j = 0; j < count; ++j) {
      system(i, j) = power;
      power *= samples[i].k;
    }
    system(i, count) = samples[i].value;
  }
  row_reduce(system);
  Polynomial poly(count);
  for (std::size_t j = 0; j < count; ++j) poly[j] = system(j, count);
  return poly;
}

std::optional<Polynomial> lowest_degree_fit(const std::vector<Sample>& samples, int max_degree) {
  const auto limit = std::min<std::size_t>(static_cast<std::size_t>(max_degree) + 1, samples.size());
  for (std::size_t count = 1; count <= limit; ++count) {
    Polynomial poly = interpolate(samples, count);
    const bool fits = std::all_of(samples.begin(), samples.end(), [&](const Sample& s) {
      return evaluate(poly, Rational(static_cast<long>(s.k))) == s.value;
    });
    if (fits) return poly;
  }
  return std::nullopt;
}

}  // namespace

QuasiPolynomial fit_quasipolynomial(const std::vector<Rational>& values, const FitOptions& options) {
  if (options.max_period < 1 || options.max_degree < 0 || options.holdout < 1 || options.skip_prefix < 0)
    throw std::invalid_argument("fit options out of range");
  const auto n = static_cast<std::int64_t>(values.size());
  const std::int64_t fit_end = n - options.holdout;
  if (fit_end <= options.skip_prefix) throw std::invalid_argument("not enough values to fit and hold out");

  for (int period = 1; period <= options.max_period; ++period) {
    std::vector<std::vector<Sample>> classes(static_cast<std::size_t>(period));
    for (std::int64_t i = options.skip_prefix; i < fit_end; ++i) {
      const std::int64_t k = i + 1;
      classes[static_cast<std::size_t>(k % period)].push_back({k, values[static_cast<std::size_t>(i)]});
    }
    std::vector<Polynomial> components;
    for (const auto& samples : classes) {
      if (samples.empty()) break;
      auto poly = lowest_degree_fit(samples, options.max_degree);
      if (!poly) break;
      components.push_back(std::move(*poly));
    }
    if (components.size() != static_cast<std::size_t>(period)) continue;
    QuasiPolynomial candidate(period, std::move(components));
    bool holds = true;
    for (std::int64_t i = fit_end; i < n && holds; ++i) holds = candidate(i + 1) == values[static_cast<std::size_t>(i)];
    if (holds) return candidate;
  }
  throw std::domain_error("not quasi-polynomial within bounds");
}

QuasiPolynomial fit_quasipolynomial(const std::vector<std::uint64_t>& values, const FitOptions& options) {
  std::vector<Rational> q;
  q.reserve(values.size());
  for (auto v : values) q.emplace_back(Integer(std::to_string(v)));
  return fit_quasipolynomial(q, options);
}

}  // namespace gct
