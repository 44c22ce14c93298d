#include <gtest/gtest.h>

#include "kgraph/errors.hpp"
#include "kgraph/lp.hpp"
#include "kgraph/stiemke.hpp"
#include "test_util.hpp"

using namespace kgraph;

namespace {

LinearConstraint row(std::initializer_list<long> coeffs, Relation rel, long rhs) {
  LinearConstraint c;
  for (long v : coeffs) c.coefficients.emplace_back(v);
  c.relation = rel;
  c.rhs = rhs;
  return c;
}

}  // namespace

TEST(LpTest, SimpleOptimum) {
  // max x + y, x + 2y <= 4, 3x + y <= 6, x, y >= 0 -> (8/5, 6/5)
  LpProblem p;
  p.num_vars = 2;
  p.objective = {1, 1};
  p.constraints = {row({1, 2}, Relation::LessEqual, 4), row({3, 1}, Relation::LessEqual, 6)};
  p.domains = {VariableDomain::NonNegative, VariableDomain::NonNegative};
  const LpResult r = lp_solve_exact(p);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.x, (RatVector{Rational(8, 5), Rational(6, 5)}));
  EXPECT_EQ(r.value, Rational(14, 5));
  EXPECT_TRUE(is_feasible(p, r.x));
  EXPECT_TRUE(is_dual_certificate(p, r.duals, r.value));
}

TEST(LpTest, RationalBoundIsExact) {
  LpProblem p;
  p.num_vars = 1;
  p.objective = {1};
  LinearConstraint c;
  c.coefficients = {1};
  c.relation = Relation::LessEqual;
  c.rhs = Rational(3, 7);
  p.constraints = {c};
  const LpResult r = lp_solve_exact(p);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.x, (RatVector{Rational(3, 7)}));
  EXPECT_TRUE(is_dual_certificate(p, r.duals, r.value));
}

TEST(LpTest, InfeasibleHasFarkasVector) {
  // x >= 1 and -x >= 0
  LpProblem p;
  p.num_vars = 1;
  p.objective = {0};
  p.constraints = {row({1}, Relation::GreaterEqual, 1), row({-1}, Relation::GreaterEqual, 0)};
  const LpResult r = lp_solve_exact(p);
  ASSERT_EQ(r.status, LpStatus::Infeasible);
  EXPECT_TRUE(is_farkas_certificate(p, r.farkas));
  EXPECT_TRUE(is_farkas_certificate(p, {1, 1}));
  EXPECT_FALSE(is_farkas_certificate(p, {1, 0}));
}

TEST(LpTest, UnboundedHasRay) {
  LpProblem p;
  p.num_vars = 2;
  p.objective = {1, 0};
  p.constraints = {row({1, -1}, Relation::LessEqual, 1)};
  p.domains = {VariableDomain::NonNegative, VariableDomain::NonNegative};
  const LpResult r = lp_solve_exact(p);
  ASSERT_EQ(r.status, LpStatus::Unbounded);
  EXPECT_TRUE(is_feasible(p, r.x));
  EXPECT_TRUE(is_unbounded_ray(p, r.ray));
}

TEST(LpTest, EqualityAndFreeVariables) {
  // max -x - y  with x - y = 3, x free, y >= -? (free) and x + y >= 1
  LpProblem p;
  p.num_vars = 2;
  p.objective = {-1, -1};
  p.constraints = {row({1, -1}, Relation::Equal, 3), row({1, 1}, Relation::GreaterEqual, 1)};
  const LpResult r = lp_solve_exact(p);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, -1);
  EXPECT_EQ(r.x, (RatVector{2, -1}));
  EXPECT_TRUE(is_dual_certificate(p, r.duals, r.value));
}

TEST(LpTest, RandomProblemsCarryValidCertificates) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    LpProblem p;
    p.num_vars = 1 + rng() % 4;
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      p.objective.emplace_back(static_cast<long>(rng() % 7) - 3);
      p.domains.push_back(rng() % 2 ? VariableDomain::Free : VariableDomain::NonNegative);
    }
    const std::size_t m = 1 + rng() % 4;
    for (std::size_t i = 0; i < m; ++i) {
      LinearConstraint c;
      for (std::size_t j = 0; j < p.num_vars; ++j) c.coefficients.emplace_back(static_cast<long>(rng() % 7) - 3);
      c.relation = static_cast<Relation>(rng() % 3);
      c.rhs = static_cast<long>(rng() % 9) - 4;
      p.constraints.push_back(c);
    }
    const LpResult r = lp_solve_exact(p);
    switch (r.status) {
      case LpStatus::Optimal:
        ASSERT_TRUE(is_feasible(p, r.x));
        ASSERT_TRUE(is_dual_certificate(p, r.duals, r.value));
        break;
      case LpStatus::Infeasible:
        ASSERT_TRUE(is_farkas_certificate(p, r.farkas));
        break;
      case LpStatus::Unbounded:
        ASSERT_TRUE(is_feasible(p, r.x));
        ASSERT_TRUE(is_unbounded_ray(p, r.ray));
        break;
    }
  }
}

TEST(StiemkeTest, Examples) {
  const Alternative neg = stiemke_alternative(IntMatrix::from_rows({{-1}}));
  ASSERT_TRUE(std::holds_alternative<Witness>(neg));
  EXPECT_EQ(std::get<Witness>(neg).x, (IntVector{-1}));

  const Alternative mixed = stiemke_alternative(IntMatrix::from_rows({{1, -1}}));
  ASSERT_TRUE(std::holds_alternative<Witness>(mixed));
  EXPECT_EQ(std::get<Witness>(mixed).x, (IntVector{1, 0}));

  const Alternative zero = stiemke_alternative(IntMatrix::from_rows({{0}}));
  ASSERT_TRUE(std::holds_alternative<PositiveKernel>(zero));
  EXPECT_EQ(std::get<PositiveKernel>(zero).xi, (RatVector{1}));
}

TEST(StiemkeTest, EmptyDimensionThrows) {
  try {
    stiemke_alternative(IntMatrix(0, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyDimension);
  }
}

TEST(StiemkeTest, ExactlyOneBranchOnRandomMatrices) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const IntMatrix m = testutil::random_matrix(rng, 1 + rng() % 4, rng() % 5, -2, 2);
    const Alternative a = stiemke_alternative(m);
    if (const auto* w = std::get_if<Witness>(&a)) {
      ASSERT_TRUE(verify_witness(m, *w)) << m;
    } else {
      ASSERT_TRUE(verify_positive_kernel(m, std::get<PositiveKernel>(a))) << m;
    }
    ASSERT_TRUE(opposite_branch_infeasible(m, a)) << m;
  }
}

TEST(StiemkeTest, VerifiersRejectBadCertificates) {
  const IntMatrix m = IntMatrix::from_rows({{1, -1}, {-1, 1}});
  EXPECT_FALSE(verify_witness(m, Witness{{1, 0}, {1, -1}}));
  EXPECT_TRUE(verify_positive_kernel(m, PositiveKernel{{1, 1}}));
  EXPECT_FALSE(verify_positive_kernel(m, PositiveKernel{{1, 0}}));
}
