#include "gct/polytope.hpp"

#include "gct/lp.hpp"

#include <stdexcept>
#include <string>

namespace gct {

Polytope::Polytope(RationalMatrix a, RationalVector b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.size()) throw std::invalid_argument("polytope: A has " + std::to_string(a_.rows()) +
                                                          " rows but b has " + std::to_string(b_.size()));
}

bool Polytope::contains(const RationalVector& x) const {
  if (x.size() != dimension()) return false;
  const RationalVector ax = a_ * x;
  for (std::size_t i = 0; i < ax.size(); ++i)
    if (ax[i] > b_[i]) return false;
  return true;
}

ParamPolytope::ParamPolytope(RationalMatrix a, RationalVector b, RationalVector c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (c_.empty()) c_.assign(b_.size(), Rational(0));
  if (a_.rows() != b_.size() || b_.size() != c_.size())
    throw std::invalid_argument("parametrized polytope: A, b, c row counts differ");
}

ParamPolytope::ParamPolytope(const Polytope& p) : ParamPolytope(p.a(), p.b(), {}) {}

Polytope ParamPolytope::at(std::int64_t k) const {
  RationalVector rhs(b_.size());
  const Rational kk(static_cast<long>(k));
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = kk * b_[i] + c_[i];
  return Polytope(a_, std::move(rhs));
}

bool feasible(const Polytope& p) { return feasible_point(p.a(), p.b()).has_value(); }

std::optional<std::vector<CoordinateRange>> bounding_box(const Polytope& p) {
  const std::size_t n = p.dimension();
  std::vector<CoordinateRange> box(n);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector obj(n);
    obj[j] = 1;
    const LpResult hi = maximize(p.a(), p.b(), obj);
    if (hi.status == LpStatus::infeasible) return std::nullopt;
    if (hi.status == LpStatus::unbounded) throw std::domain_error("unbounded polytope");
    obj[j] = -1;
    const LpResult lo = maximize(p.a(), p.b(), obj);
    if (lo.status == LpStatus::unbounded) throw std::domain_error("unbounded polytope");
    box[j] = {-lo.value, hi.value};
  }
  if (n == 0 && !feasible(p)) return std::nullopt;
  return box;
}

namespace {

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

class LatticeCounter {
 public:
  LatticeCounter(const Polytope& p, const std::vector<CoordinateRange>& box) : n_(p.dimension()) {
    for (const auto& r : box) {
      lo_.push_back(ceil_of(r.min));
      hi_.push_back(floor_of(r.max));
    }
    // Clear denominators row by row: integral x makes the left side integral,
    // so the right side may be floored.
    for (std::size_t i = 0; i < p.num_constraints(); ++i) {
      RationalVector row = p.a().row(i);
      row.push_back(p.b()[i]);
      const Integer scale = lcm_of_denominators(row);
      std::vector<Integer> coeffs(n_);
      bool any = false;
      for (std::size_t j = 0; j < n_; ++j) {
        coeffs[j] = Rational(row[j] * scale).get_num();
        any = any || coeffs[j] != 0;
      }
      const Integer rhs = Rational(row[n_] * scale).get_num();
      if (!any) {
        if (rhs < 0) infeasible_ = true;
        continue;
      }
      rows_.push_back(std::move(coeffs));
      rhs_.push_back(rhs);
    }
    // rest_min_[i][d]: least value of sum_{j > d} a_ij x_j over the box.
    rest_min_.assign(rows_.size(), std::vector<Integer>(n_ + 1));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Integer acc = 0;
      for (std::size_t d = n_; d-- > 0;) {
        rest_min_[i][d] = acc;
        const Integer& c = rows_[i][d];
        acc += c > 0 ? c * lo_[d] : c * hi_[d];
      }
    }
    partial_.assign(rows_.size(), Integer(0));
  }

  std::uint64_t count() {
    if (infeasible_) return 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (lo_[j] > hi_[j]) return 0;
    if (n_ == 0) return 1;
    total_ = 0;
    descend(0);
    return total_;
  }

 private:
  void descend(std::size_t d) {
    Integer lo = lo_[d];
    Integer hi = hi_[d];
    Integer q;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Integer slack = rhs_[i] - partial_[i] - rest_min_[i][d];
      const Integer& c = rows_[i][d];
      if (c == 0) {
        if (slack < 0) return;
        continue;
      }
      if (c > 0) {
        mpz_fdiv_q(q.get_mpz_t(), slack.get_mpz_t(), c.get_mpz_t());
        if (q < hi) hi = q;
      } else {
        mpz_cdiv_q(q.get_mpz_t(), slack.get_mpz_t(), c.get_mpz_t());
        if (q > lo) lo = q;
      }
      if (lo > hi) return;
    }
    if (d + 1 == n_) {
      const Integer width = hi - lo + 1;
      total_ += std::stoull(width.get_str());
      return;
    }
    for (Integer x = lo; x <= hi; ++x) {
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i][d] != 0) partial_[i] += rows_[i][d] * x;
      descend(d + 1);
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i][d] != 0) partial_[i] -= rows_[i][d] * x;
    }
  }

  std::size_t n_;
  std::vector<Integer> lo_, hi_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<Integer> rhs_;
  std::vector<std::vector<Integer>> rest_min_;
  std::vector<Integer> partial_;
  std::uint64_t total_ = 0;
  bool infeasible_ = false;
};

std::vector<std::size_t> tight_rows(const Polytope& p, const RationalVector& x) {
  std::vector<std::size_t> tight;
  const RationalVector ax = p.a() * x;
  for (std::size_t i = 0; i < ax.size(); ++i)
    if (ax[i] == p.b()[i]) tight.push_back(i);
  return tight;
}

RationalMatrix select_rows(const RationalMatrix& a, const std::vector<std::size_t>& rows) {
  RationalMatrix out(rows.size(), a.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(rows[r], c);
  return out;
}

// Moves x along null directions of the tight rows until they reach rank n.
RationalVector purify(const Polytope& p, RationalVector x) {
  const std::size_t n = p.dimension();
  for (;;) {
    const auto tight = tight_rows(p, x);
    const RationalMatrix at = select_rows(p.a(), tight);
    if (rank(at) == n) return x;
    RationalVector dir = nullspace(at).front();
    // Rank(A) = n means one of +dir, -dir hits a new constraint.
    bool blocked = false;
    for (const auto& v : p.a() * dir) blocked = blocked || sgn(v) > 0;
    if (!blocked)
      for (auto& v : dir) v = -v;
    const RationalVector ad2 = p.a() * dir;
    const RationalVector ax = p.a() * x;
    std::optional<Rational> step;
    for (std::size_t i = 0; i < ad2.size(); ++i) {
      if (sgn(ad2[i]) <= 0) continue;
      Rational t = (p.b()[i] - ax[i]) / ad2[i];
      if (!step || t < *step) step = t;
    }
    if (!step) throw std::domain_error("no vertex");
    for (std::size_t j = 0; j < n; ++j) x[j] += *step * dir[j];
  }
}

}  // namespace

std::uint64_t count_integer_points(const Polytope& p) {
  const auto box = bounding_box(p);
  if (!box) return 0;
  return LatticeCounter(p, *box).count();
}

RationalVector vertex(const Polytope& p) {
  const std::size_t n = p.dimension();
  auto start = feasible_point(p.a(), p.b());
  if (!start) throw std::domain_error("infeasible polytope");
  if (rank(p.a()) < n) throw std::domain_error("no vertex");

  std::vector<RationalVector> rows;
  RationalVector rhs = p.b();
  for (std::size_t i = 0; i < p.num_constraints(); ++i) rows.push_back(p.a().row(i));
  RationalVector current = *start;
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector obj(n);
    obj[j] = -1;
    const RationalMatrix a = RationalMatrix::from_rows(rows);
    const LpResult r = maximize(a, rhs, obj);
    if (r.status != LpStatus::optimal) return purify(p, current);
    current = r.point;
    RationalVector up(n), down(n);
    up[j] = 1;
    down[j] = -1;
    rows.push_back(up);
    rhs.push_back(-r.value);
    rows.push_back(down);
    rhs.push_back(r.value);
  }
  return current;
}

bool is_vertex(const Polytope& p, const RationalVector& x) {
  if (!p.contains(x)) return false;
  return rank(select_rows(p.a(), tight_rows(p, x))) == p.dimension();
}

std::vector<std::uint64_t> ehrhart_counts(const ParamPolytope& pp, int max_k) {
  std::vector<std::uint64_t> counts;
  for (int k = 1; k <= max_k; ++k) {
    try {
      counts.push_back(count_integer_points(pp.at(k)));
    } catch (const std::domain_error& e) {
      throw std::domain_error(std::string(e.what()) + " at k=" + std::to_string(k));
    }
  }
  return counts;
}

IntegralDilation smallest_integral_dilation(const Polytope& p) { return smallest_integral_dilation(p, vertex(p)); }

IntegralDilation smallest_integral_dilation(const Polytope& p, const RationalVector& chosen_vertex) {
  if (!feasible(p)) throw std::domain_error("infeasible polytope");
  if (!is_vertex(p, chosen_vertex)) throw std::invalid_argument("chosen point is not a vertex");
  IntegralDilation out;
  out.k = lcm_of_denominators(chosen_vertex);
  for (const auto& v : chosen_vertex) out.point.push_back(Rational(v * out.k).get_num());
  return out;
}

}  // namespace gct
