#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "kgraph/errors.hpp"
#include "kgraph/hermite.hpp"
#include "test_util.hpp"

using namespace kgraph;

namespace {

// Independent oracle: determinant by Laplace expansion.
Integer laplace_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    const Integer term = a(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// Independent oracle: invariant factors as quotients of determinantal
// divisors D_t = gcd of all t x t minors.
IntVector determinantal_factors(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols(), r = std::min(m, n);
  IntVector divisors{1};
  for (std::size_t t = 1; t <= r; ++t) {
    Integer g = 0;
    std::vector<bool> rs(m, false), cs(n, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(t), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(t), true);
      do {
        IntMatrix sub(t, t);
        for (std::size_t i = 0, si = 0; i < m; ++i) {
          if (!rs[i]) continue;
          for (std::size_t j = 0, sj = 0; j < n; ++j)
            if (cs[j]) sub(si, sj++) = a(i, j);
          ++si;
        }
        g = gcd(g, laplace_det(sub));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    divisors.push_back(g);
  }
  IntVector factors;
  for (std::size_t t = 1; t <= r; ++t)
    factors.push_back(sgn(divisors[t]) == 0 ? Integer(0) : Integer(divisors[t] / divisors[t - 1]));
  return factors;
}

bool is_hermite(const HermiteForm& hf) {
  const IntMatrix& h = hf.H;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    if (j >= hf.rank) {
      for (std::size_t r = 0; r < h.rows(); ++r)
        if (sgn(h(r, j)) != 0) return false;
      continue;
    }
    const std::size_t p = hf.pivot_rows[j];
    if (j > 0 && p <= hf.pivot_rows[j - 1]) return false;
    if (sgn(h(p, j)) <= 0) return false;
    for (std::size_t r = 0; r < p; ++r)
      if (sgn(h(r, j)) != 0) return false;
    for (std::size_t l = 0; l < j; ++l)
      if (sgn(h(p, l)) < 0 || h(p, l) >= h(p, j)) return false;
  }
  return true;
}

}  // namespace

TEST(IntMatrixTest, ArithmeticBasics) {
  const IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  const IntMatrix b = IntMatrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, IntMatrix::from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), IntMatrix::from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(power(b, 2), IntMatrix::identity(2));
  EXPECT_EQ(power(a, 0), IntMatrix::identity(2));
  EXPECT_EQ(a * IntVector({1, 1}), (IntVector{3, 7}));
  EXPECT_EQ(a.row_sum(1), 7);
}

TEST(IntMatrixTest, ClearDenominatorsUsesLcm) {
  const RatVector v{Rational(1, 2), Rational(2, 3), Rational(0)};
  EXPECT_EQ(common_denominator(v), 6);
  EXPECT_EQ(clear_denominators(v), (IntVector{3, 4, 0}));
}

TEST(IntMatrixTest, BigEntriesStayExact) {
  IntMatrix a(1, 1);
  a(0, 0) = Integer("99999999999999999999", 10);
  EXPECT_EQ((a * a)(0, 0), Integer("9999999999999999999800000000000000000001", 10));
}

TEST(HermiteTest, RowVectorReducesToGcd) {
  const HermiteForm hf = hermite_normal_form(IntMatrix::from_rows({{4, 6}}));
  EXPECT_EQ(hf.H, IntMatrix::from_rows({{2, 0}}));
  EXPECT_EQ(IntMatrix::from_rows({{4, 6}}) * hf.U, hf.H);
  EXPECT_EQ(hf.rank, 1u);
}

TEST(HermiteTest, IdentityAndZero) {
  const HermiteForm id = hermite_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(id.H, IntMatrix::identity(3));
  EXPECT_EQ(id.U, IntMatrix::identity(3));
  const HermiteForm zero = hermite_normal_form(IntMatrix(2, 3));
  EXPECT_TRUE(zero.H.is_zero());
  EXPECT_EQ(zero.rank, 0u);
}

TEST(HermiteTest, RowFormIsTransposeOfColumnForm) {
  const IntMatrix a = IntMatrix::from_rows({{4}, {6}});
  const HermiteForm hf = row_hermite_normal_form(a);
  EXPECT_EQ(hf.H, IntMatrix::from_rows({{2}, {0}}));
  EXPECT_EQ(hf.U * a, hf.H);
}

TEST(HermiteTest, RandomFormsAreCanonical) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    const IntMatrix a = testutil::random_matrix(rng, rows, cols, -9, 9);
    const HermiteForm hf = hermite_normal_form(a);
    ASSERT_TRUE(is_hermite(hf));
    ASSERT_EQ(a * hf.U, hf.H);
    ASSERT_EQ(abs(determinant(hf.U)), 1);
    const IntMatrix v = testutil::random_unimodular(rng, cols);
    ASSERT_EQ(hermite_normal_form(a * v).H, hf.H);
  }
}

TEST(SmithTest, ReferenceExamples) {
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).invariant_factors, (IntVector{1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(4)).invariant_factors, (IntVector{1, 1, 1, 1}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}})).invariant_factors, (IntVector{2, 4}));
}

TEST(SmithTest, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix a = testutil::random_matrix(rng, rows, cols, -6, 6);
    const SmithForm s = smith_normal_form(a);
    ASSERT_EQ(s.U * a * s.V, s.D);
    ASSERT_EQ(s.invariant_factors, determinantal_factors(a)) << a;
  }
}

TEST(SmithTest, ZeroMatrixHasZeroFactors) {
  const SmithForm s = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(s.invariant_factors, (IntVector{0, 0}));
  EXPECT_EQ(s.rank(), 0u);
}

TEST(LatticeTest, ReferenceExamples) {
  const IntMatrix a = IntMatrix::from_rows({{4, 6}});
  const auto x = lattice_member(a, {2});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (IntVector{-1, 1}));
  EXPECT_FALSE(lattice_member(a, {1}));
  EXPECT_EQ(*lattice_member(a, {0}), (IntVector{0, 0}));
}

TEST(LatticeTest, LengthMismatchThrows) {
  try {
    lattice_member(IntMatrix::from_rows({{1, 2}}), {1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(LatticeTest, ImagesAreMembers) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix a = testutil::random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, -5, 5);
    IntVector x(a.cols());
    for (auto& e : x) e = static_cast<long>(rng() % 7) - 3;
    const IntVector b = a * x;
    const auto y = lattice_member(a, b);
    ASSERT_TRUE(y);
    ASSERT_EQ(a * *y, b);
  }
}

TEST(KernelTest, BasisSpansKernel) {
  const IntMatrix a = IntMatrix::from_rows({{1, 1}, {1, 1}});
  const IntMatrix k = kernel_basis(a);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((a * k).is_zero());
  EXPECT_EQ(abs(k(0, 0)), 1);
}

TEST(StableKernelTest, ReferenceExamples) {
  EXPECT_EQ(stable_kernel(IntMatrix::from_rows({{2}})).rank(), 0u);
  const StableKernel nil = stable_kernel(IntMatrix::from_rows({{0, 1}, {0, 0}}));
  EXPECT_EQ(nil.rank(), 2u);
  EXPECT_EQ(nil.stabilized_at, 2u);
  const StableKernel ones = stable_kernel(IntMatrix::from_rows({{1, 1}, {1, 1}}));
  ASSERT_EQ(ones.rank(), 1u);
  EXPECT_TRUE(ones.contains({1, -1}));
  EXPECT_TRUE(ones.contains({-3, 3}));
  EXPECT_FALSE(ones.contains({1, 0}));
}

TEST(DeterminantTest, AgreesWithLaplace) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng() % 6;
    const IntMatrix a = testutil::random_matrix(rng, n, n, -7, 7);
    ASSERT_EQ(determinant(a), laplace_det(a));
  }
}
