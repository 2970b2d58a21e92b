#include "gct/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gct {

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("variable index out of range");
  Exponent e(num_vars, 0);
  e[index] = 1;
  MultiPoly p(num_vars);
  p.add_term(e, 1);
  return p;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != num_vars_) throw std::invalid_argument("exponent length differs from variable count");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly out(a.num_vars_);
  MultiPoly::Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != num_vars_) throw std::invalid_argument("one image per variable required");
  const std::size_t target_vars = images.empty() ? 0 : images.front().num_vars();
  MultiPoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::permute_variables(const std::vector<std::size_t>& perm) const {
  if (perm.size() != num_vars_) throw std::invalid_argument("permutation length differs from variable count");
  MultiPoly out(num_vars_);
  Exponent moved(num_vars_);
  for (const auto& [e, c] : terms_) {
    std::fill(moved.begin(), moved.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) moved[perm[i]] += e[i];
    out.add_term(moved, c);
  }
  return out;
}

std::string MultiPoly::to_string(const std::function<std::string(std::size_t)>& name) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Highest exponent first, matching the usual written order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += name(i);
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      s += gct::to_string(mag);
    } else if (mag == 1) {
      s += factors;
    } else {
      s += gct::to_string(mag) + "*" + factors;
    }
  }
  return s;
}

std::function<std::string(std::size_t)> matrix_var_names(std::size_t n, char letter) {
  return [n, letter](std::size_t v) {
    return std::string(1, letter) + std::to_string(v / n + 1) + (n >= 10 ? "_" : "") + std::to_string(v % n + 1);
  };
}

PolyMatrix symbolic_matrix(std::size_t n) {
  PolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(n * n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = MultiPoly::variable(n * n, matrix_var(n, i, j));
  return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t vars = a.front().front().num_vars();
  PolyMatrix out(n, std::vector<MultiPoly>(b.front().size(), MultiPoly(vars)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b.front().size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

PolyMatrix multiply(const RationalMatrix& a, const PolyMatrix& b) {
  const std::size_t vars = b.front().front().num_vars();
  PolyMatrix out(a.rows(), std::vector<MultiPoly>(b.front().size(), MultiPoly(vars)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.front().size(); ++j) out[i][j] += b[k][j] * a(i, k);
    }
  return out;
}

PolyMatrix multiply(const PolyMatrix& a, const RationalMatrix& b) {
  const std::size_t vars = a.front().front().num_vars();
  PolyMatrix out(a.size(), std::vector<MultiPoly>(b.cols(), MultiPoly(vars)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.rows(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) out[i][j] += a[i][k] * b(k, j);
      }
  return out;
}

MultiPoly trace(const PolyMatrix& m) {
  MultiPoly out(m.front().front().num_vars());
  for (std::size_t i = 0; i < m.size(); ++i) out += m[i][i];
  return out;
}

namespace {

MultiPoly leibniz(const PolyMatrix& m, bool signed_terms) {
  const std::size_t n = m.size();
  const std::size_t vars = n == 0 ? 0 : m.front().front().num_vars();
  MultiPoly out(vars);
  if (n == 0) return MultiPoly::constant(vars, 1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    MultiPoly term = m[0][perm[0]];
    for (std::size_t i = 1; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    if (signed_terms && inversions % 2 == 1) term *= Rational(-1);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m) { return leibniz(m, true); }
MultiPoly permanent(const PolyMatrix& m) { return leibniz(m, false); }

}  // namespace gct
