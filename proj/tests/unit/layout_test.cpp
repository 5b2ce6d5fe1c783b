#include <gtest/gtest.h>

#include "hive/layout.hpp"
#include "hive/validate.hpp"
#include "test_support.hpp"

namespace hive {
namespace {

HiveLayout ring(std::size_t k, std::vector<std::size_t> phi) {
  HiveLayout l;
  l.k = k;
  l.phi = std::move(phi);
  return l;
}

TEST(Span, Examples) {
  auto l6 = ring(6, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(span(l6, 0, 4), 2u);
  EXPECT_EQ(span(l6, 3, 3), 0u);
  auto l5 = ring(5, {0, 1, 2, 3, 4});
  EXPECT_EQ(span(l5, 0, 3), 2u);
  EXPECT_THROW(span(l5, 0, 5), HiveError);
}

TEST(Span, SymmetricAndBounded) {
  testing::Engine rng(3);
  for (std::size_t k = 1; k <= 9; ++k) {
    auto l = ring(k, testing::random_phi(k, rng));
    for (AxisId i = 0; i < k; ++i) {
      EXPECT_EQ(span(l, i, i), 0u);
      for (AxisId j = 0; j < k; ++j) {
        EXPECT_EQ(span(l, i, j), span(l, j, i));
        EXPECT_LE(span(l, i, j), k / 2);
      }
    }
  }
}

TEST(ClassifyEdge, ByAxisSpan) {
  const Partition p({0, 0, 1, 2, 3});
  const auto l = make_layout(p, {0, 1, 2, 3}, 1);
  EXPECT_TRUE(std::holds_alternative<IntraAxisEdge>(classify_edge(l, {0, 1})));
  EXPECT_TRUE(std::holds_alternative<ProperEdge>(classify_edge(l, {0, 2})));
  const auto cls = classify_edge(l, {0, 3});
  ASSERT_TRUE(std::holds_alternative<LongEdge>(cls));
  EXPECT_EQ(std::get<LongEdge>(cls).span, 2u);
  EXPECT_STREQ(edge_class_name(cls), "long");
  EXPECT_THROW(classify_edge(l, {0, 9}), HiveError);
}

TEST(ClassifyEdge, CountsPartitionEdges) {
  testing::Engine rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = testing::random_graph(25, 0.2, rng);
    const std::size_t k = testing::draw(rng, 1, 7);
    const auto l = make_layout(testing::random_partition(25, k, rng), testing::random_phi(k, rng), 1);
    const auto c = count_edge_classes(l, g);
    EXPECT_EQ(c.intra + c.proper + c.long_edges, g.edge_count());
    EXPECT_GE(c.long_span_total, 2 * c.long_edges);
  }
}

TEST(MakeLayout, FollowsVertexIdOrder) {
  const Partition p({1, 0, 1, 0, 1});
  const auto l = make_layout(p, {1, 0}, 2);
  EXPECT_EQ(l.pi, (std::vector<std::size_t>{0, 0, 1, 1, 2}));
  EXPECT_EQ(l.axis_sequence(1), (std::vector<VertexId>{0, 2, 4}));
  EXPECT_EQ(l.axis_at(0), 1u);
  EXPECT_TRUE(validate_layout(l).empty());
}

TEST(Validate, ReportsEveryViolation) {
  const Partition p({0, 0, 1});
  auto l = make_layout(p, {0, 1}, 1);
  EXPECT_TRUE(validate_layout(l).empty());
  l.pi[1] = 0;
  l.phi = {0, 0};
  l.gaps = 0;
  const auto v = validate_layout(l);
  EXPECT_TRUE(has_violation(v, "pi not bijective"));
  EXPECT_TRUE(has_violation(v, "phi not bijective"));
  EXPECT_TRUE(has_violation(v, "gap count"));
}

TEST(Validate, AlphaMustBeSurjective) {
  HiveLayout l;
  l.k = 3;
  l.phi = {0, 1, 2};
  l.alpha = {0, 1};
  l.pi = {0, 0};
  EXPECT_TRUE(has_violation(validate_layout(l), "alpha not surjective"));
  l.alpha = {0, 5};
  EXPECT_TRUE(has_violation(validate_layout(l), "alpha not total"));
}

TEST(Validate, GraphSizeMismatch) {
  const auto l = make_layout(Partition({0, 1}), {0, 1}, 1);
  const Graph g({"a", "b", "c"}, {});
  EXPECT_FALSE(validate_layout(l, g).empty());
}

}  // namespace
}  // namespace hive
