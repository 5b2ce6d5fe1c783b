#include <gtest/gtest.h>

#include <sstream>

#include "hive/graph.hpp"
#include "hive/graph_io.hpp"

namespace hive {
namespace {

GraphInput pairs(std::vector<std::pair<std::string, std::string>> edges) {
  GraphInput in;
  in.edges = std::move(edges);
  return in;
}

TEST(Graph, CanonicalizesAndSortsEdges) {
  Graph g({"a", "b", "c"}, {{2, 0}, {1, 0}});
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(std::vector<VertexId>(g.neighbors(0).begin(), g.neighbors(0).end()),
            (std::vector<VertexId>{1, 2}));
}

TEST(Graph, RejectsNonSimpleInput) {
  EXPECT_THROW(Graph({"a"}, {{0, 0}}), HiveError);
  EXPECT_THROW(Graph({"a", "b"}, {{0, 1}, {1, 0}}), HiveError);
  EXPECT_THROW(Graph({"a", "b"}, {{0, 2}}), HiveError);
}

TEST(BuildGraph, CollapsesDuplicates) {
  const auto built = build_graph(pairs({{"a", "b"}, {"b", "c"}, {"a", "b"}}));
  EXPECT_EQ(built.graph.vertex_count(), 3u);
  EXPECT_EQ(built.graph.edge_count(), 2u);
  EXPECT_EQ(built.stats.duplicate_edges_dropped, 1u);
}

TEST(BuildGraph, DropsSelfLoops) {
  const auto built = build_graph(pairs({{"a", "a"}}));
  EXPECT_EQ(built.graph.vertex_count(), 1u);
  EXPECT_EQ(built.graph.edge_count(), 0u);
  EXPECT_EQ(built.stats.self_loops_dropped, 1u);
}

TEST(BuildGraph, ReversedDuplicateCollapses) {
  const auto built = build_graph(pairs({{"a", "b"}, {"b", "a"}}));
  EXPECT_EQ(built.graph.edge_count(), 1u);
}

TEST(BuildGraph, UndeclaredVertexWithExplicitList) {
  auto in = pairs({{"a", "z"}});
  in.vertices = std::vector<std::string>{"a", "b"};
  EXPECT_THROW(build_graph(in), HiveError);
}

TEST(BuildGraph, PartitionHintMustCoverVertices) {
  auto in = pairs({{"a", "b"}});
  in.groups = std::map<std::string, long long>{{"a", 0}};
  EXPECT_THROW(build_graph(in), HiveError);
}

TEST(BuildGraph, PartitionHintRenumberedDensely) {
  auto in = pairs({{"a", "b"}, {"b", "c"}});
  in.groups = std::map<std::string, long long>{{"a", 7}, {"b", -3}, {"c", 7}};
  const auto built = build_graph(in);
  ASSERT_TRUE(built.partition);
  EXPECT_EQ(built.partition->membership(), (std::vector<AxisId>{1, 0, 1}));
}

TEST(BuildGraph, LabelsDefaultToNames) {
  auto in = pairs({{"x", "y"}});
  in.labels["x"] = "Ex";
  const auto built = build_graph(in);
  EXPECT_EQ(built.graph.label(0), "Ex");
  EXPECT_EQ(built.graph.label(1), "y");
  EXPECT_EQ(built.names, (std::vector<std::string>{"x", "y"}));
}

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  std::istringstream text("# header\na b\n\n b c  # trailing\n");
  const auto in = parse_edge_list(text);
  ASSERT_EQ(in.edges.size(), 2u);
  EXPECT_EQ(in.edges[1], (std::pair<std::string, std::string>{"b", "c"}));
}

TEST(EdgeList, RejectsMalformedLine) {
  std::istringstream one("a\n");
  EXPECT_THROW(parse_edge_list(one), HiveError);
  std::istringstream three("a b c\n");
  EXPECT_THROW(parse_edge_list(three), HiveError);
}

TEST(GraphJson, ReadsVerticesLabelsGroups) {
  std::istringstream text(R"({"vertices":[{"id":"a","label":"A","group":2},{"id":"b","group":5},{"id":3,"group":2}],
                              "edges":[["a","b"],["b",3]]})");
  const auto built = build_graph(parse_graph_json(text));
  EXPECT_EQ(built.graph.vertex_count(), 3u);
  EXPECT_EQ(built.graph.label(0), "A");
  EXPECT_EQ(built.names[2], "3");
  ASSERT_TRUE(built.partition);
  EXPECT_EQ(built.partition->group_count(), 2u);
}

TEST(GraphJson, SchemaErrors) {
  for (const char* bad : {"[]", R"({"vertices":[]})", R"({"edges":[["a"]]})",
                          R"({"vertices":[{"label":"x"}],"edges":[]})", "{not json"}) {
    std::istringstream text(bad);
    EXPECT_THROW(parse_graph_json(text), HiveError) << bad;
  }
}

TEST(GraphIo, GuessFormat) {
  EXPECT_EQ(guess_format("g.JSON"), GraphFormat::kJson);
  EXPECT_EQ(guess_format("g.txt"), GraphFormat::kEdgeList);
  EXPECT_EQ(guess_format("noext"), GraphFormat::kEdgeList);
}

TEST(GraphIo, CaseStudyFile) {
  const auto built = load_graph(HIVEPLOT_DATA_DIR "/coauthor_75.json", GraphFormat::kJson);
  EXPECT_EQ(built.graph.vertex_count(), 75u);
  EXPECT_EQ(built.graph.edge_count(), 190u);
  ASSERT_TRUE(built.partition);
  EXPECT_EQ(built.partition->group_count(), 7u);
}

TEST(GraphIo, MissingFile) { EXPECT_THROW(load_graph("/nonexistent/graph.txt", GraphFormat::kEdgeList), HiveError); }

}  // namespace
}  // namespace hive
