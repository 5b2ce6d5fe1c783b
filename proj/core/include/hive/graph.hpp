#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hive {

/// Dense vertex index assigned at ingestion.
using VertexId = std::uint32_t;

/// Index of an axis (equivalently, of a vertex group).
using AxisId = std::uint32_t;

/// Thrown for malformed inputs and violated preconditions.
class HiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge with `u < v`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph with per-vertex display labels.
///
/// Edges are stored canonically (`u < v`) in lexicographic order, so edge
/// indices are stable for a given vertex/edge set.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from `labels.size()` vertices. Throws HiveError on
  /// self-loops, duplicate edges or out-of-range endpoints; use
  /// `build_graph` for lenient ingestion.
  Graph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  // CSR adjacency, neighbors sorted ascending.
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
};

}  // namespace hive
