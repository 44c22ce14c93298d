#include <gtest/gtest.h>

#include "kgraph/ktheory.hpp"
#include "kgraph/oracle.hpp"
#include "test_util.hpp"

using namespace kgraph;

namespace {

const IntMatrix kSwap = IntMatrix::from_rows({{0, 1}, {1, 0}});
const IntMatrix kThreeCycle = IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});

LimitElement elem(std::int64_t stage, IntVector v, const IntMatrix& gen) { return {stage, std::move(v), gen}; }

}  // namespace

TEST(CokerTest, Examples) {
  const CokerPresentation one = coker_presentation(IntMatrix::identity(1));
  EXPECT_EQ(one.free_rank, 1u);
  EXPECT_TRUE(one.torsion.empty());
  EXPECT_EQ(one.project({1}), (IntVector{1}));

  const CokerPresentation two = coker_presentation(IntMatrix::from_rows({{2}}));
  EXPECT_EQ(two.dimension(), 0u);

  const CokerPresentation cyc = coker_presentation(kThreeCycle);
  EXPECT_EQ(cyc.invariant_factors, (IntVector{1, 1, 0}));
  EXPECT_EQ(cyc.free_rank, 1u);
  EXPECT_FALSE(cyc.cone_is_exact);
}

TEST(CokerTest, TorsionCoordinates) {
  // coker diag(2, 3) = Z/6
  const CokerPresentation p = cokernel(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(p.torsion, (IntVector{6}));
  EXPECT_EQ(p.moduli(), (IntVector{6}));
}

TEST(CokerTest, ProjectionKillsImageAndLiftInverts) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix b = testutil::random_matrix(rng, n, n, -4, 4);
    const CokerPresentation p = cokernel(b);
    for (std::size_t j = 0; j < n; ++j) ASSERT_TRUE(is_zero(p.project(b.column(j))));
    for (std::size_t i = 0; i + 1 < p.invariant_factors.size(); ++i)
      if (sgn(p.invariant_factors[i + 1]) != 0)
        ASSERT_EQ(p.invariant_factors[i + 1] % p.invariant_factors[i], 0);
    IntVector y(n);
    for (auto& e : y) e = static_cast<long>(rng() % 11) - 5;
    const IntVector coords = p.project(y);
    ASSERT_EQ(p.project(p.lift(coords)), coords);
    // y and its lift differ by an element of the image
    ASSERT_TRUE(lattice_member(b, subtract(y, p.lift(coords))));
  }
}

TEST(CokerEndoTest, Examples) {
  const CokerEndomorphism a = induced_coker_endo(make_kgraph({kSwap, IntMatrix::identity(2)}));
  EXPECT_EQ(a.coker.dimension(), 2u);
  EXPECT_EQ(a.action, kSwap);

  const CokerEndomorphism b = induced_coker_endo(make_kgraph({IntMatrix::from_rows({{2}}), IntMatrix::identity(1)}));
  EXPECT_EQ(b.action, IntMatrix::from_rows({{2}}));

  const CokerEndomorphism c = induced_coker_endo(make_kgraph({IntMatrix::identity(1), IntMatrix::from_rows({{2}})}));
  EXPECT_EQ(c.coker.dimension(), 0u);
  EXPECT_EQ(c.action.rows(), 0u);
}

TEST(CokerEndoTest, WellDefinedOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const KGraph g = random_kgraph({seed, 1 + seed % 5, 2, 2, Strategy::Polynomial});
    EXPECT_NO_THROW(induced_coker_endo(g));
  }
}

TEST(LimitTest, EqualityExamples) {
  const IntMatrix two = IntMatrix::from_rows({{2}});
  EXPECT_TRUE(limit_equal(elem(0, {1}, two), elem(0, {1}, two)));
  EXPECT_FALSE(limit_equal(elem(0, {1}, two), elem(0, {0}, two)));
  const IntMatrix nil = IntMatrix::from_rows({{0, 1}, {0, 0}});
  EXPECT_TRUE(limit_equal(elem(0, {1, 0}, nil), elem(0, {0, 0}, nil)));
  EXPECT_TRUE(limit_equal(elem(0, {1}, two), elem(3, {8}, two)));
  EXPECT_TRUE(limit_equal(elem(-2, {1}, two), elem(0, {4}, two)));
}

TEST(LimitTest, GeneratorMismatchThrows) {
  try {
    limit_equal(elem(0, {1}, IntMatrix::from_rows({{2}})), elem(0, {1}, IntMatrix::from_rows({{3}})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GeneratorMismatch);
  }
}

TEST(LimitTest, EquivalenceRelation) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const IntMatrix gen = testutil::random_matrix(rng, n, n, -1, 1);
    auto draw = [&] {
      IntVector v(n);
      for (auto& e : v) e = static_cast<long>(rng() % 3) - 1;
      return elem(static_cast<std::int64_t>(rng() % 3), v, gen);
    };
    const LimitElement a = draw(), b = draw(), c = draw();
    ASSERT_TRUE(limit_equal(a, a));
    ASSERT_EQ(limit_equal(a, b), limit_equal(b, a));
    if (limit_equal(a, b) && limit_equal(b, c)) ASSERT_TRUE(limit_equal(a, c));
    ASSERT_TRUE(limit_equal(a, elem(a.stage + 1, gen * a.vec, gen)));
  }
}

TEST(LimitTest, PositiveBounded) {
  const IntMatrix two = IntMatrix::from_rows({{2}});
  EXPECT_EQ(limit_positive_bounded(elem(0, {3}, two), 5), 0u);
  const IntMatrix ones = IntMatrix::from_rows({{1, 1}, {1, 1}});
  EXPECT_EQ(limit_positive_bounded(elem(0, {1, -1}, ones), 5), 1u);
  EXPECT_FALSE(limit_positive_bounded(elem(0, {-1}, two), 10));
}

TEST(HalphaTest, Examples) {
  const KGraph dbl = make_kgraph({IntMatrix::from_rows({{2}}), IntMatrix::identity(1)});
  EXPECT_FALSE(halpha_class_test(dbl, {0}, 2));
  const auto found = halpha_class_test(dbl, {1}, 1);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->x, (IntVector{-1}));
  EXPECT_EQ(found->y, (IntVector{0}));

  const KGraph swap = make_kgraph({kSwap, IntMatrix::identity(2)});
  EXPECT_FALSE(halpha_class_test(swap, {1, 0}, 2));
}

TEST(HalphaTest, SearcherAgreesWithDirectTest) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const KGraph g = random_kgraph({seed, 1 + seed % 3, 2, 2, Strategy::Polynomial});
    const HalphaSearcher searcher(g, 1);
    for (long a = 0; a <= 2; ++a) {
      IntVector c(g.size(), 0);
      c[0] = a;
      const auto direct = halpha_class_test(g, c, 1);
      const auto fast = searcher.test(c);
      ASSERT_EQ(direct.has_value(), fast.has_value());
      if (direct) {
        ASSERT_EQ(direct->x, fast->x);
        ASSERT_EQ(direct->y, fast->y);
      }
    }
  }
}

TEST(HalphaTest, InvalidInputs) {
  const KGraph dbl = make_kgraph({IntMatrix::from_rows({{2}}), IntMatrix::identity(1)});
  EXPECT_THROW(halpha_class_test(dbl, {-1}, 1), Error);
  EXPECT_THROW(halpha_class_test(make_kgraph({IntMatrix::identity(1)}), {1}, 1), Error);
}
