#include <gtest/gtest.h>

#include <algorithm>

#include "kgraph/graph.hpp"
#include "kgraph/oracle.hpp"
#include "test_util.hpp"

using namespace kgraph;

namespace {

const IntMatrix kSwap = IntMatrix::from_rows({{0, 1}, {1, 0}});
const IntMatrix kUpper = IntMatrix::from_rows({{1, 1}, {0, 1}});

RawGraph raw_of(std::int64_t k, std::vector<std::vector<IntVector>> ms) {
  RawGraph raw;
  raw.k = k;
  const std::size_t n = ms.empty() ? 0 : ms[0].size();
  for (std::size_t v = 0; v < n; ++v) raw.vertices.push_back("v" + std::to_string(v));
  raw.matrices = std::move(ms);
  return raw;
}

bool has_kind(const std::vector<Violation>& vs, ViolationKind kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST(ValidateTest, OneByOneIsValid) {
  const KGraph g = validate(raw_of(2, {{{1}}, {{1}}}));
  EXPECT_EQ(g.rank(), 2u);
  EXPECT_EQ(g.size(), 1u);
}

TEST(ValidateTest, NonCommutingReportsPosition) {
  const auto vs = check(raw_of(2, {{{0, 1}, {1, 0}}, {{1, 1}, {0, 1}}}));
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, ViolationKind::NonCommuting);
  EXPECT_EQ(vs[0].color, 0u);
  EXPECT_EQ(vs[0].other_color, 1u);
  EXPECT_EQ(vs[0].row, 0u);
  EXPECT_EQ(vs[0].col, 0u);
}

TEST(ValidateTest, ZeroRowReported) {
  const auto vs = check(raw_of(1, {{{0, 0}, {1, 1}}}));
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, ViolationKind::ZeroRow);
  EXPECT_EQ(vs[0].row, 0u);
}

TEST(ValidateTest, ShapeAndSignViolations) {
  EXPECT_TRUE(has_kind(check(raw_of(1, {{{1, 0}}})), ViolationKind::ShapeMismatch));
  EXPECT_TRUE(has_kind(check(raw_of(2, {{{1}}})), ViolationKind::ShapeMismatch));
  EXPECT_TRUE(has_kind(check(raw_of(1, {{{-1, 2}, {0, 1}}})), ViolationKind::NegativeEntry));
  try {
    validate(raw_of(1, {{{0}}}));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violations().size(), 1u);
  }
}

TEST(ValidateTest, DuplicateVertexIdsRejected) {
  RawGraph raw = raw_of(1, {{{1, 0}, {0, 1}}});
  raw.vertices = {"a", "a"};
  EXPECT_FALSE(check(raw).empty());
}

TEST(GraphTest, VertexLookup) {
  const KGraph g = make_kgraph({kSwap, IntMatrix::identity(2)}, {"x", "y"});
  EXPECT_EQ(g.require_index("y"), 1u);
  EXPECT_FALSE(g.index_of("z"));
  try {
    g.require_index("z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownVertex);
  }
}

TEST(DegreeMatrixTest, Examples) {
  const KGraph swap = make_kgraph({kSwap, IntMatrix::identity(2)});
  EXPECT_EQ(degree_matrix(swap, {{0, 0}}), IntMatrix::identity(2));
  EXPECT_EQ(degree_matrix(swap, {{1, 1}}), kSwap);
  const KGraph scalar = make_kgraph({IntMatrix::from_rows({{2}})});
  EXPECT_EQ(degree_matrix(scalar, {{3}}), IntMatrix::from_rows({{8}}));
}

TEST(ReachableTest, Examples) {
  const KGraph one = make_kgraph({IntMatrix::identity(1), IntMatrix::identity(1)});
  EXPECT_EQ(reachable_into(one, 0).indices(), (std::vector<std::size_t>{0}));
  const KGraph upper = make_kgraph({kUpper, IntMatrix::identity(2)});
  EXPECT_EQ(reachable_into(upper, "v0").indices(), (std::vector<std::size_t>{0, 1}));
  const KGraph lower = make_kgraph({kUpper.transpose(), IntMatrix::identity(2)});
  EXPECT_EQ(reachable_into(lower, "v0").indices(), (std::vector<std::size_t>{0}));
}

TEST(ReachableTest, AlwaysHereditary) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const KGraph g = random_kgraph({seed, 1 + seed % 5, 2, 2, Strategy::Polynomial});
    for (std::size_t v = 0; v < g.size(); ++v) {
      const HereditarySet h = reachable_into(g, v);
      ASSERT_TRUE(h.contains(v));
      ASSERT_TRUE(is_hereditary(g, h.mask()));
    }
  }
}

TEST(CofinalTest, Examples) {
  EXPECT_TRUE(is_cofinal(make_kgraph({IntMatrix::identity(1), IntMatrix::identity(1)})));
  EXPECT_TRUE(is_cofinal(make_kgraph({kSwap, IntMatrix::identity(2)})));
  EXPECT_FALSE(is_cofinal(make_kgraph({kUpper, IntMatrix::identity(2)})));
  EXPECT_FALSE(is_cofinal(make_kgraph({IntMatrix::identity(2), IntMatrix::identity(2)})));
}

TEST(CofinalTest, StronglyConnectedIsCofinal) {
  // A strongly connected union graph makes every H_v all of the vertices.
  const IntMatrix cyc = IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  EXPECT_TRUE(is_cofinal(make_kgraph({cyc, power(cyc, 2)})));
}

TEST(CycleTest, Examples) {
  const KGraph dbl = make_kgraph({IntMatrix::from_rows({{2}})});
  const CycleAnalysis a = coordinate_cycle_analysis(dbl, 0);
  EXPECT_TRUE(a.has_cycle);
  ASSERT_TRUE(a.entrance_cycle);
  EXPECT_EQ(a.entrance_cycle->entrance->vertex, 0u);
  EXPECT_EQ(a.entrance_cycle->entrance->excess, 1);

  const IntMatrix cyc = IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  const CycleAnalysis b = coordinate_cycle_analysis(make_kgraph({cyc}), 0);
  EXPECT_TRUE(b.has_cycle);
  EXPECT_FALSE(b.entrance_cycle);
  ASSERT_TRUE(b.cycle);
  EXPECT_EQ(b.cycle->cycle.size(), 3u);

  const KGraph upper = make_kgraph({kUpper, IntMatrix::identity(2)});
  const CycleAnalysis c = coordinate_cycle_analysis(upper, 0);
  ASSERT_TRUE(c.entrance_cycle);
  EXPECT_EQ(c.entrance_cycle->cycle, (std::vector<std::size_t>{0}));
  EXPECT_EQ(c.entrance_cycle->entrance->source, 1u);
}

TEST(CycleTest, ReportsAreConsistent) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const KGraph g = random_kgraph({seed, 1 + seed % 6, 2, 2, Strategy::Polynomial});
    for (std::size_t color = 0; color < g.rank(); ++color) {
      const CycleAnalysis a = coordinate_cycle_analysis(g, color);
      ASSERT_TRUE(a.has_cycle);  // no sources on a finite graph
      ASSERT_TRUE(a.cycle && is_consistent(g, *a.cycle));
      if (a.entrance_cycle) ASSERT_TRUE(is_consistent(g, *a.entrance_cycle));
    }
  }
}

TEST(T2Test, Examples) {
  const auto one = find_t2_data(make_kgraph({IntMatrix::identity(1), IntMatrix::identity(1)}));
  ASSERT_TRUE(one);
  EXPECT_EQ(one->vertex, 0u);
  EXPECT_FALSE(find_t2_data(make_kgraph({IntMatrix::from_rows({{2}}), IntMatrix::identity(1)})));
  const auto swap = find_t2_data(make_kgraph({kSwap, IntMatrix::identity(2)}));
  ASSERT_TRUE(swap);
  EXPECT_EQ(swap->vertex, 0u);
  EXPECT_EQ(swap->zeta.cycle.size(), 2u);
  EXPECT_EQ(swap->xi.cycle, (std::vector<std::size_t>{0}));
}

TEST(SkewTest, Examples) {
  const KGraph loops = make_kgraph({IntMatrix::identity(1), IntMatrix::identity(1)});
  const SkewWindow w = skew_product_window(loops, StageBox::cube(2, 0, 1));
  EXPECT_EQ(w.vertex_count(), 4u);
  EXPECT_EQ(w.edge_count(), 4);
  EXPECT_TRUE(topological_order(w));

  const KGraph dbl = make_kgraph({IntMatrix::from_rows({{2}})});
  const SkewWindow d = skew_product_window(dbl, StageBox::cube(1, 0, 2));
  EXPECT_EQ(d.vertex_count(), 3u);
  EXPECT_EQ(d.edges.size(), 2u);
  EXPECT_EQ(d.edge_count(), 4);
  EXPECT_TRUE(topological_order(d));
}

TEST(SkewTest, BoxErrors) {
  const KGraph dbl = make_kgraph({IntMatrix::from_rows({{2}})});
  try {
    skew_product_window(dbl, StageBox::cube(1, 0, 1000), {.max_window_vertices = 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoxTooLarge);
  }
  try {
    skew_product_window(dbl, StageBox::cube(2, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(SkewTest, TopologicalOrderRespectsStages) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const KGraph g = random_kgraph({seed, 1 + seed % 4, 2, 2, Strategy::Permutation});
    const SkewWindow w = skew_product_window(g, StageBox::cube(2, -1, 2));
    const auto order = topological_order(w);
    ASSERT_TRUE(order);
    ASSERT_EQ(order->size(), w.vertex_count());
    std::vector<std::size_t> pos(order->size());
    for (std::size_t i = 0; i < order->size(); ++i) pos[(*order)[i]] = i;
    for (const SkewEdge& e : w.edges) ASSERT_LT(pos[e.range], pos[e.source]);
  }
}
