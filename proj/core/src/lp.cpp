#include "kgraph/lp.hpp"

#include <limits>
#include <optional>

#include "kgraph/errors.hpp"

namespace kgraph {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Standard form: A x = b, b >= 0, x >= 0, with one artificial column per row
// appended so that the artificial block of the tableau always holds B^{-1}.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p) : problem_(p) {
    const std::size_t m = p.constraints.size();
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      plus_.push_back(structural_++);
      minus_.push_back(p.domain(j) == VariableDomain::Free ? structural_++ : kNone);
    }
    for (std::size_t i = 0; i < m; ++i)
      slack_.push_back(p.constraints[i].relation == Relation::Equal ? kNone : structural_++);

    width_ = structural_ + m + 1;
    rows_.assign(m, RatVector(width_));
    sigma_.assign(m, 1);
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const LinearConstraint& c = p.constraints[i];
      if (c.coefficients.size() != p.num_vars)
        throw Error(ErrorCode::LengthMismatch, "LP constraint has wrong number of coefficients");
      RatVector& row = rows_[i];
      for (std::size_t j = 0; j < p.num_vars; ++j) {
        row[plus_[j]] = c.coefficients[j];
        if (minus_[j] != kNone) row[minus_[j]] = -c.coefficients[j];
      }
      if (slack_[i] != kNone) row[slack_[i]] = c.relation == Relation::LessEqual ? 1 : -1;
      row[rhs()] = c.rhs;
      if (sgn(c.rhs) < 0) {
        sigma_[i] = -1;
        for (std::size_t j = 0; j < structural_; ++j) row[j] = -row[j];
        row[rhs()] = -row[rhs()];
      }
      row[structural_ + i] = 1;
      basis_[i] = structural_ + i;
    }
  }

  LpResult solve() {
    const std::size_t m = rows_.size();
    LpResult result;

    // Phase 1: minimize the sum of artificials.
    RatVector cost(width_ - 1);
    for (std::size_t i = 0; i < m; ++i) cost[structural_ + i] = 1;
    run(cost, width_ - 1);
    if (sgn(objective_value(cost)) > 0) {
      result.status = LpStatus::Infeasible;
      const RatVector y_hat = multipliers(cost);
      result.farkas.resize(m);
      for (std::size_t i = 0; i < m; ++i) result.farkas[i] = sigma_[i] * y_hat[i];
      result.basis = basis_;
      return result;
    }
    drive_out_artificials();

    // Phase 2: minimize -c . x over the structural columns only.
    RatVector cost2(width_ - 1);
    for (std::size_t j = 0; j < problem_.num_vars; ++j) {
      const Rational& cj = problem_.objective.empty() ? zero_ : problem_.objective[j];
      cost2[plus_[j]] = -cj;
      if (minus_[j] != kNone) cost2[minus_[j]] = cj;
    }
    const std::size_t unbounded_column = run(cost2, structural_);
    result.x = primal();
    result.basis = basis_;
    if (unbounded_column != kNone) {
      result.status = LpStatus::Unbounded;
      RatVector d(structural_);
      d[unbounded_column] = 1;
      for (std::size_t r = 0; r < m; ++r)
        if (basis_[r] < structural_) d[basis_[r]] = -rows_[r][unbounded_column];
      result.ray = to_original(d);
      return result;
    }
    result.status = LpStatus::Optimal;
    result.value = 0;
    for (std::size_t j = 0; j < problem_.num_vars; ++j)
      if (!problem_.objective.empty()) result.value += problem_.objective[j] * result.x[j];
    const RatVector y_hat = multipliers(cost2);
    result.duals.resize(m);
    for (std::size_t i = 0; i < m; ++i) result.duals[i] = -sigma_[i] * y_hat[i];
    return result;
  }

 private:
  std::size_t rhs() const { return width_ - 1; }

  void pivot(std::size_t r, std::size_t e) {
    RatVector& prow = rows_[r];
    const Rational inv = 1 / prow[e];
    for (auto& x : prow) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][e]) == 0) continue;
      const Rational f = rows_[i][e];
      for (std::size_t j = 0; j < width_; ++j)
        if (sgn(prow[j]) != 0) rows_[i][j] -= f * prow[j];
    }
    basis_[r] = e;
  }

  // Bland's rule over columns [0, allowed). Returns kNone at optimality or
  // the entering column along which the objective is unbounded.
  std::size_t run(const RatVector& cost, std::size_t allowed) {
    const std::size_t m = rows_.size();
    while (true) {
      std::vector<bool> basic(width_ - 1, false);
      for (std::size_t b : basis_) basic[b] = true;
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < allowed && entering == kNone; ++j) {
        if (basic[j]) continue;
        Rational d = cost[j];
        for (std::size_t r = 0; r < m; ++r)
          if (sgn(cost[basis_[r]]) != 0 && sgn(rows_[r][j]) != 0) d -= cost[basis_[r]] * rows_[r][j];
        if (sgn(d) < 0) entering = j;
      }
      if (entering == kNone) return kNone;

      std::size_t leaving = kNone;
      Rational best;
      for (std::size_t r = 0; r < m; ++r) {
        if (sgn(rows_[r][entering]) <= 0) continue;
        const Rational ratio = rows_[r][rhs()] / rows_[r][entering];
        if (leaving == kNone || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (leaving == kNone) return entering;
      pivot(leaving, entering);
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < structural_) continue;
      for (std::size_t j = 0; j < structural_; ++j)
        if (sgn(rows_[r][j]) != 0) {
          pivot(r, j);
          break;
        }
    }
  }

  Rational objective_value(const RatVector& cost) const {
    Rational v = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) v += cost[basis_[r]] * rows_[r][rhs()];
    return v;
  }

  // c_B^t B^{-1}, read from the artificial block.
  RatVector multipliers(const RatVector& cost) const {
    const std::size_t m = rows_.size();
    RatVector y(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t r = 0; r < m; ++r)
        if (sgn(cost[basis_[r]]) != 0) y[i] += cost[basis_[r]] * rows_[r][structural_ + i];
    return y;
  }

  RatVector primal() const {
    RatVector std_x(structural_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] < structural_) std_x[basis_[r]] = rows_[r][rhs()];
    return to_original(std_x);
  }

  RatVector to_original(const RatVector& std_x) const {
    RatVector x(problem_.num_vars);
    for (std::size_t j = 0; j < problem_.num_vars; ++j) {
      x[j] = std_x[plus_[j]];
      if (minus_[j] != kNone) x[j] -= std_x[minus_[j]];
    }
    return x;
  }

  const LpProblem& problem_;
  std::size_t structural_ = 0;
  std::size_t width_ = 0;
  std::vector<std::size_t> plus_, minus_, slack_;
  std::vector<RatVector> rows_;
  std::vector<int> sigma_;
  std::vector<std::size_t> basis_;
  Rational zero_ = 0;
};

Rational row_dot(const LinearConstraint& c, const RatVector& x) {
  Rational s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) s += c.coefficients[j] * x[j];
  return s;
}

// (A^t y)_j
RatVector transpose_times(const LpProblem& p, const RatVector& y) {
  RatVector out(p.num_vars);
  for (std::size_t i = 0; i < p.constraints.size(); ++i)
    if (sgn(y[i]) != 0)
      for (std::size_t j = 0; j < p.num_vars; ++j) out[j] += p.constraints[i].coefficients[j] * y[i];
  return out;
}

}  // namespace

LpResult lp_solve_exact(const LpProblem& problem) {
  if (!problem.objective.empty() && problem.objective.size() != problem.num_vars)
    throw Error(ErrorCode::LengthMismatch, "LP objective has wrong length");
  if (!problem.domains.empty() && problem.domains.size() != problem.num_vars)
    throw Error(ErrorCode::LengthMismatch, "LP domain list has wrong length");
  return Tableau(problem).solve();
}

bool is_feasible(const LpProblem& p, const RatVector& x) {
  if (x.size() != p.num_vars) return false;
  for (std::size_t j = 0; j < p.num_vars; ++j)
    if (p.domain(j) == VariableDomain::NonNegative && sgn(x[j]) < 0) return false;
  for (const auto& c : p.constraints) {
    const Rational lhs = row_dot(c, x);
    switch (c.relation) {
      case Relation::LessEqual: if (lhs > c.rhs) return false; break;
      case Relation::GreaterEqual: if (lhs < c.rhs) return false; break;
      case Relation::Equal: if (lhs != c.rhs) return false; break;
    }
  }
  return true;
}

bool is_dual_certificate(const LpProblem& p, const RatVector& y, const Rational& value) {
  if (y.size() != p.constraints.size()) return false;
  Rational by = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Relation rel = p.constraints[i].relation;
    if (rel == Relation::LessEqual && sgn(y[i]) < 0) return false;
    if (rel == Relation::GreaterEqual && sgn(y[i]) > 0) return false;
    by += p.constraints[i].rhs * y[i];
  }
  const RatVector aty = transpose_times(p, y);
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    const Rational cj = p.objective.empty() ? Rational(0) : p.objective[j];
    if (p.domain(j) == VariableDomain::Free ? aty[j] != cj : aty[j] < cj) return false;
  }
  return by == value;
}

bool is_farkas_certificate(const LpProblem& p, const RatVector& y) {
  if (y.size() != p.constraints.size()) return false;
  Rational by = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Relation rel = p.constraints[i].relation;
    if (rel == Relation::LessEqual && sgn(y[i]) > 0) return false;
    if (rel == Relation::GreaterEqual && sgn(y[i]) < 0) return false;
    by += p.constraints[i].rhs * y[i];
  }
  const RatVector aty = transpose_times(p, y);
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    if (p.domain(j) == VariableDomain::Free ? sgn(aty[j]) != 0 : sgn(aty[j]) > 0) return false;
  }
  return sgn(by) > 0;
}

bool is_unbounded_ray(const LpProblem& p, const RatVector& d) {
  if (d.size() != p.num_vars) return false;
  Rational gain = 0;
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    if (p.domain(j) == VariableDomain::NonNegative && sgn(d[j]) < 0) return false;
    if (!p.objective.empty()) gain += p.objective[j] * d[j];
  }
  for (const auto& c : p.constraints) {
    const Rational lhs = row_dot(c, d);
    switch (c.relation) {
      case Relation::LessEqual: if (sgn(lhs) > 0) return false; break;
      case Relation::GreaterEqual: if (sgn(lhs) < 0) return false; break;
      case Relation::Equal: if (sgn(lhs) != 0) return false; break;
    }
  }
  return sgn(gain) > 0;
}

}  // namespace kgraph
