#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hive/graph.hpp"
#include "hive/partition.hpp"

namespace hive {

struct GraphInput {
  std::vector<std::pair<std::string, std::string>> edges;
  /// When present, every edge endpoint must be listed here; otherwise
  /// vertices are collected from the edges in first-appearance order.
  std::optional<std::vector<std::string>> vertices;
  /// Display labels keyed by vertex name; the name is used when absent.
  std::map<std::string, std::string> labels;
  /// Optional precomputed grouping (vertex name -> group).
  std::optional<std::map<std::string, long long>> groups;
};

struct BuildStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges_dropped = 0;
};

struct BuiltGraph {
  Graph graph;
  std::vector<std::string> names;  // external vertex ids, indexed by VertexId
  std::optional<Partition> partition;
  BuildStats stats;
};

/// Lenient ingestion: drops self-loops, collapses duplicate edges, assigns
/// dense vertex ids. Group hints are renumbered densely in ascending order
/// of the given group values. Throws HiveError for edges naming unknown
/// vertices (with an explicit vertex list) and for incomplete group hints.
BuiltGraph build_graph(const GraphInput& input);

enum class GraphFormat { kEdgeList, kJson };

/// Whitespace separated label pairs, one per line; '#' starts a comment.
GraphInput parse_edge_list(std::istream& in);

/// {"vertices":[{"id","label","group"?}], "edges":[["u","v"],...]}
GraphInput parse_graph_json(std::istream& in);

/// Picks the parser by format and reads the whole file.
BuiltGraph load_graph(const std::string& path, GraphFormat format);

/// Guesses the format from the file extension (".json" -> kJson).
GraphFormat guess_format(const std::string& path);

}  // namespace hive
