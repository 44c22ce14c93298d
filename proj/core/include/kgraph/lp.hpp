// Exact rational linear programming: two-phase dense tableau simplex with
// Bland's least-index rule. Every outcome carries a checkable certificate.
#pragma once

#include <cstddef>
#include <vector>

#include "kgraph/integer.hpp"

namespace kgraph {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class VariableDomain { Free, NonNegative };

struct LinearConstraint {
  RatVector coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// maximize objective . x subject to constraints, x_j in domains[j].
/// An empty domains vector means every variable is free.
struct LpProblem {
  std::size_t num_vars = 0;
  RatVector objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VariableDomain> domains;

  VariableDomain domain(std::size_t j) const {
    return domains.empty() ? VariableDomain::Free : domains[j];
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Certificates, one per constraint row i:
///  - Optimal: `duals` y with y_i >= 0 on <= rows, y_i <= 0 on >= rows,
///    (A^t y)_j = c_j on free variables and >= c_j on nonnegative ones, and
///    b . y = value.
///  - Infeasible: `farkas` y with y_i <= 0 on <= rows, y_i >= 0 on >= rows,
///    (A^t y)_j = 0 on free variables and <= 0 on nonnegative ones, b . y > 0.
///  - Unbounded: `x` feasible and `ray` d with A d respecting each relation
///    homogeneously, d_j >= 0 on nonnegative variables, and c . d > 0.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RatVector x;
  Rational value;
  RatVector duals;
  RatVector farkas;
  RatVector ray;
  /// Basic columns of the internal standard form at termination.
  std::vector<std::size_t> basis;
};

LpResult lp_solve_exact(const LpProblem& problem);

bool is_feasible(const LpProblem& problem, const RatVector& x);
bool is_dual_certificate(const LpProblem& problem, const RatVector& y, const Rational& value);
bool is_farkas_certificate(const LpProblem& problem, const RatVector& y);
bool is_unbounded_ray(const LpProblem& problem, const RatVector& d);

}  // namespace kgraph
