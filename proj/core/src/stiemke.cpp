#include "kgraph/stiemke.hpp"

#include "kgraph/errors.hpp"

namespace kgraph {

LpProblem positive_kernel_program(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t p = m.cols();
  LpProblem lp;
  lp.num_vars = n + 1;
  lp.objective.assign(n + 1, 0);
  lp.objective[n] = 1;
  for (std::size_t j = 0; j < p; ++j) {
    LinearConstraint c{RatVector(n + 1), Relation::Equal, 0};
    for (std::size_t v = 0; v < n; ++v) c.coefficients[v] = m(v, j);
    lp.constraints.push_back(std::move(c));
  }
  for (std::size_t v = 0; v < n; ++v) {
    LinearConstraint c{RatVector(n + 1), Relation::GreaterEqual, 0};
    c.coefficients[v] = 1;
    c.coefficients[n] = -1;
    lp.constraints.push_back(std::move(c));
  }
  LinearConstraint total{RatVector(n + 1), Relation::Equal, 1};
  for (std::size_t v = 0; v < n; ++v) total.coefficients[v] = 1;
  lp.constraints.push_back(std::move(total));
  return lp;
}

LpProblem witness_program(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t p = m.cols();
  LpProblem lp;
  lp.num_vars = p;
  lp.objective.assign(p, 0);
  LinearConstraint sum{RatVector(p), Relation::GreaterEqual, 1};
  for (std::size_t v = 0; v < n; ++v) {
    LinearConstraint c{RatVector(p), Relation::GreaterEqual, 0};
    for (std::size_t j = 0; j < p; ++j) {
      c.coefficients[j] = m(v, j);
      sum.coefficients[j] += m(v, j);
    }
    lp.constraints.push_back(std::move(c));
  }
  lp.constraints.push_back(std::move(sum));
  return lp;
}

namespace {

IntVector primitive(IntVector x) {
  Integer g = 0;
  for (const auto& e : x) g = gcd(g, e);
  if (g > 1)
    for (auto& e : x) e /= g;
  return x;
}

}  // namespace

Alternative stiemke_alternative(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) throw Error(ErrorCode::EmptyDimension, "Stiemke alternative needs at least one row");
  if (m.cols() == 0) return PositiveKernel{RatVector(n, Rational(1))};

  const LpResult kernel = lp_solve_exact(positive_kernel_program(m));
  if (kernel.status == LpStatus::Optimal && sgn(kernel.value) > 0) {
    PositiveKernel out{RatVector(kernel.x.begin(), kernel.x.begin() + static_cast<long>(n))};
    if (!verify_positive_kernel(m, out))
      throw Error(ErrorCode::Internal, "positive kernel failed exact verification");
    return out;
  }

  const LpResult wit = lp_solve_exact(witness_program(m));
  if (wit.status == LpStatus::Infeasible)
    throw Error(ErrorCode::Internal, "Stiemke alternative: neither branch is feasible");
  Witness out;
  out.x = primitive(clear_denominators(wit.x));
  out.image = m * out.x;
  if (!verify_witness(m, out)) throw Error(ErrorCode::Internal, "witness failed exact verification");
  return out;
}

bool verify_witness(const IntMatrix& m, const Witness& w) {
  if (w.x.size() != m.cols()) return false;
  const IntVector image = m * w.x;
  return image == w.image && is_nonnegative(image) && !is_zero(image);
}

bool verify_positive_kernel(const IntMatrix& m, const PositiveKernel& k) {
  if (k.xi.size() != m.rows() || !is_strictly_positive(k.xi)) return false;
  return is_zero(clear_denominators(m.transpose() * k.xi));
}

bool opposite_branch_infeasible(const IntMatrix& m, const Alternative& a) {
  if (std::holds_alternative<PositiveKernel>(a)) {
    const LpProblem lp = witness_program(m);
    const LpResult r = lp_solve_exact(lp);
    return r.status == LpStatus::Infeasible && is_farkas_certificate(lp, r.farkas);
  }
  if (m.cols() == 0) return false;
  const LpProblem lp = positive_kernel_program(m);
  const LpResult r = lp_solve_exact(lp);
  if (r.status == LpStatus::Infeasible) return is_farkas_certificate(lp, r.farkas);
  return r.status == LpStatus::Optimal && sgn(r.value) <= 0 &&
         is_dual_certificate(lp, r.duals, r.value);
}

}  // namespace kgraph
