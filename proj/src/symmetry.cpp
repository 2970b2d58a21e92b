#include "gct/weylmod.hpp"
#include <functional>

#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace gct {

namespace {

void monomials_rec(std::size_t var, int remaining, MultiPoly::Exponent& cur, std::vector<MultiPoly::Exponent>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    monomials_rec(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

std::vector<MultiPoly::Exponent> monomials_of_degree(std::size_t vars, int degree) {
  std::vector<MultiPoly::Exponent> out;
  MultiPoly::Exponent cur(vars, 0);
  monomials_rec(0, degree, cur, out);
  return out;
}

// sum of coeff * x_dst * d/dx_src over the listed triples
using Derivation = std::vector<std::tuple<std::size_t, std::size_t, Rational>>;

MultiPoly apply(const Derivation& d, const MultiPoly& f) {
  MultiPoly out(f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    for (const auto& [src, dst, k] : d) {
      if (e[src] == 0) continue;
      MultiPoly::Exponent moved = e;
      moved[src] -= 1;
      moved[dst] += 1;
      out.add_term(moved, c * k * e[src]);
    }
  }
  return out;
}

std::vector<std::size_t> transpose_perm(std::size_t n) {
  std::vector<std::size_t> p(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[matrix_var(n, i, j)] = matrix_var(n, j, i);
  return p;
}

// Stacks the matrices of the given linear operators on span(basis) and
// returns the common kernel. Operators must map the span into itself.
template <typename Op>
std::vector<RationalVector> common_kernel(std::size_t vars, const std::vector<MultiPoly::Exponent>& basis,
                                          const std::vector<Op>& ops) {
  std::map<MultiPoly::Exponent, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<RationalMatrix> blocks;
  for (const auto& op : ops) {
    RationalMatrix block(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      MultiPoly mono(vars);
      mono.add_term(basis[j], 1);
      const MultiPoly image = op(mono);
      for (const auto& [e, c] : image.terms()) {
        const auto it = index.find(e);
        if (it == index.end()) throw std::logic_error("operator leaves the form space");
        block(it->second, j) += c;
      }
    }
    blocks.push_back(std::move(block));
  }
  return nullspace(vstack(blocks));
}

bool proportional(const RationalVector& v, const std::vector<MultiPoly::Exponent>& basis, const MultiPoly& ref) {
  Rational scale = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Rational r = ref.coefficient(basis[i]);
    if ((sgn(r) == 0) != (sgn(v[i]) == 0)) return false;
    if (sgn(r) == 0) continue;
    const Rational ratio = v[i] / r;
    if (sgn(scale) == 0) scale = ratio;
    else if (ratio != scale) return false;
  }
  return sgn(scale) != 0;
}

}  // namespace

SymmetryCharacterization symmetry_characterization(FormKind kind, int size) {
  if (size != 2 && size != 3) throw std::invalid_argument("symmetry characterization supports sizes 2 and 3");
  const auto n = static_cast<std::size_t>(size);
  const std::size_t vars = n * n;
  using Op = std::function<MultiPoly(const MultiPoly&)>;
  std::vector<Op> ops;
  std::vector<MultiPoly::Exponent> basis;
  MultiPoly reference(vars);

  const auto tp = transpose_perm(n);
  ops.push_back([tp](const MultiPoly& f) { return f.permute_variables(tp) - f; });

  if (kind == FormKind::determinant) {
    basis = monomials_of_degree(vars, size);
    reference = determinant(symbolic_matrix(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Derivation left, right;
        for (std::size_t k = 0; k < n; ++k) {
          left.emplace_back(matrix_var(n, i, k), matrix_var(n, j, k), Rational(1));
          right.emplace_back(matrix_var(n, k, j), matrix_var(n, k, i), Rational(1));
        }
        ops.push_back([left](const MultiPoly& f) { return apply(left, f); });
        ops.push_back([right](const MultiPoly& f) { return apply(right, f); });
      }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Derivation left, right;
      for (std::size_t k = 0; k < n; ++k) {
        left.emplace_back(matrix_var(n, i, k), matrix_var(n, i, k), Rational(1));
        left.emplace_back(matrix_var(n, i + 1, k), matrix_var(n, i + 1, k), Rational(-1));
        right.emplace_back(matrix_var(n, k, i), matrix_var(n, k, i), Rational(1));
        right.emplace_back(matrix_var(n, k, i + 1), matrix_var(n, k, i + 1), Rational(-1));
      }
      ops.push_back([left](const MultiPoly& f) { return apply(left, f); });
      ops.push_back([right](const MultiPoly& f) { return apply(right, f); });
    }
  } else {
    // The diagonal part of the stabilizer forces every row and column degree
    // to be equal, which at degree n leaves the permutation monomials.
    for (const auto& e : monomials_of_degree(vars, size)) {
      bool balanced = true;
      for (std::size_t i = 0; i < n && balanced; ++i) {
        int row = 0, col = 0;
        for (std::size_t k = 0; k < n; ++k) {
          row += e[matrix_var(n, i, k)];
          col += e[matrix_var(n, k, i)];
        }
        balanced = row == 1 && col == 1;
      }
      if (balanced) basis.push_back(e);
    }
    reference = permanent(symbolic_matrix(n));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<std::size_t> rows(vars), cols(vars);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          const std::size_t rr = r == i ? i + 1 : r == i + 1 ? i : r;
          const std::size_t cc = c == i ? i + 1 : c == i + 1 ? i : c;
          rows[matrix_var(n, r, c)] = matrix_var(n, rr, c);
          cols[matrix_var(n, r, c)] = matrix_var(n, r, cc);
        }
      ops.push_back([rows](const MultiPoly& f) { return f.permute_variables(rows) - f; });
      ops.push_back([cols](const MultiPoly& f) { return f.permute_variables(cols) - f; });
    }
  }

  const auto kernel = common_kernel(vars, basis, ops);
  SymmetryCharacterization out;
  out.ambient_dimension = basis.size();
  out.dimension = kernel.size();
  out.spans_reference = kernel.size() == 1 && proportional(kernel[0], basis, reference);
  return out;
}

}  // namespace gct
