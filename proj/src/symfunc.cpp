#include "gct/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace gct {

namespace {

Partition sorted_partition(std::vector<int> exponents) {
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  return Partition::from_padded(exponents);
}

std::vector<int> padded(const Partition& p, std::size_t n) {
  std::vector<int> v(n, 0);
  for (std::size_t i = 0; i < p.length() && i < n; ++i) v[i] = p[i];
  return v;
}

}  // namespace

std::optional<int> SymPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.size();
  for (const auto& [mu, c] : terms_)
    if (mu.size() != d) return std::nullopt;
  return d;
}

Rational SymPoly::coefficient(std::span<const int> exponents) const {
  return coefficient(sorted_partition(std::vector<int>(exponents.begin(), exponents.end())));
}

Rational SymPoly::coefficient(const Partition& mu) const {
  const auto it = terms_.find(mu);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add(const Partition& mu, const Rational& c) {
  if (mu.length() > static_cast<std::size_t>(num_vars_)) {
    if (sgn(c) != 0) throw std::invalid_argument("monomial uses more variables than available");
    return;
  }
  Rational& slot = terms_[mu];
  slot += c;
  if (sgn(slot) == 0) terms_.erase(mu);
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [mu, c] : other.terms_) add(mu, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [mu, c] : other.terms_) add(mu, -c);
  return *this;
}

SymPoly SymPoly::operator*(const Rational& c) const {
  SymPoly out(num_vars_);
  if (sgn(c) == 0) return out;
  for (const auto& [mu, v] : terms_) out.terms_.emplace(mu, v * c);
  return out;
}

SymPoly operator*(const SymPoly& f, const SymPoly& g) {
  if (f.num_vars_ != g.num_vars_) throw std::invalid_argument("variable count mismatch");
  const auto n = static_cast<std::size_t>(f.num_vars_);
  SymPoly out(f.num_vars_);
  std::set<int> f_degrees, g_degrees;
  for (const auto& [mu, c] : f.terms_) f_degrees.insert(mu.size());
  for (const auto& [mu, c] : g.terms_) g_degrees.insert(mu.size());

  // [x^lambda](f g) = sum over a + b = lambda of [x^a] f * [x^b] g.
  for (int df : f_degrees) {
    for (int dg : g_degrees) {
      for (const auto& lambda : partitions_of(df + dg, n)) {
        const std::vector<int> target = padded(lambda, n);
        std::vector<int> a(n, 0);
        Rational sum = 0;
        std::function<void(std::size_t, int)> split = [&](std::size_t i, int left) {
          if (i == n) {
            if (left != 0) return;
            std::vector<int> b(n);
            for (std::size_t j = 0; j < n; ++j) b[j] = target[j] - a[j];
            const Rational fa = f.coefficient(a);
            if (sgn(fa) == 0) return;
            sum += fa * g.coefficient(b);
            return;
          }
          for (int v = std::min(left, target[i]); v >= 0; --v) {
            a[i] = v;
            split(i + 1, left - v);
          }
          a[i] = 0;
        };
        split(0, df);
        out.add(lambda, sum);
      }
    }
  }
  return out;
}

SymPoly schur(const Partition& lambda, int num_vars) {
  SymPoly out(num_vars);
  if (lambda.length() > static_cast<std::size_t>(num_vars)) return out;
  for (const auto& mu : partitions_of(lambda.size(), static_cast<std::size_t>(num_vars))) {
    const std::uint64_t k = kostka(lambda, mu.parts());
    if (k != 0) out.add(mu, Rational(Integer(std::to_string(k))));
  }
  return out;
}

SchurExpansion schur_expand(const SymPoly& f) {
  SchurExpansion out;
  if (f.is_zero()) return out;
  if (!f.homogeneous_degree()) throw std::invalid_argument("schur_expand: nonhomogeneous input");
  SymPoly rest = f;
  while (!rest.is_zero()) {
    // Lexicographic order refines dominance, so the largest key leads.
    const auto& [lead, c] = *rest.terms().rbegin();
    const Partition lambda = lead;
    const Rational coeff = c;
    out.emplace(lambda, coeff);
    rest -= schur(lambda, f.num_vars()) * coeff;
  }
  return out;
}

Multiplicities to_multiplicities(const SchurExpansion& expansion) {
  Multiplicities out;
  for (const auto& [lambda, c] : expansion) {
    if (!is_integer(c) || sgn(c) < 0)
      throw std::logic_error("coefficient of s_" + lambda.to_string() + " is not a nonnegative integer");
    out.emplace(lambda, std::stoull(c.get_num().get_str()));
  }
  return out;
}

Multiplicities product_expand(const Partition& alpha, const Partition& beta) {
  const int n = std::max(alpha.size() + beta.size(), 1);
  return to_multiplicities(schur_expand(schur(alpha, n) * schur(beta, n)));
}

Multiplicities plethysm_expand(const Partition& pi, const Partition& mu, int degree_cap) {
  const int degree = pi.size() * mu.size();
  if (degree > degree_cap)
    throw std::invalid_argument("plethysm degree " + std::to_string(degree) + " exceeds cap " +
                                std::to_string(degree_cap));
  const int n = std::max(degree, 1);
  const auto nn = static_cast<std::size_t>(n);

  // Monomials of s_mu, with multiplicity, as exponent vectors.
  std::vector<std::vector<int>> inner;
  for (const auto& t : enumerate_ssyt(mu, n)) inner.push_back(t.content(n));
  const int alphabet = static_cast<int>(inner.size());

  // s_pi evaluated at those monomials; only dominant exponents are kept since
  // the result is symmetric.
  SymPoly result(n);
  std::map<Partition, Integer> counts;
  std::vector<std::vector<int>> rows;
  for (int len : pi.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> exponent(nn, 0);
  const std::size_t nrows = rows.size();
  if (pi.length() > static_cast<std::size_t>(alphabet)) return {};
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == nrows) {
      if (std::is_sorted(exponent.begin(), exponent.end(), std::greater<>()))
        counts[Partition::from_padded(exponent)] += 1;
      return;
    }
    if (c == rows[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= alphabet; ++v) {
      rows[r][c] = v;
      const auto& m = inner[static_cast<std::size_t>(v - 1)];
      for (std::size_t j = 0; j < nn; ++j) exponent[j] += m[j];
      fill(r, c + 1);
      for (std::size_t j = 0; j < nn; ++j) exponent[j] -= m[j];
    }
  };
  fill(0, 0);
  for (const auto& [lambda, count] : counts) result.add(lambda, Rational(count));
  return to_multiplicities(schur_expand(result));
}

}  // namespace gct
