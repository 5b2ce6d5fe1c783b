#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hive/graph.hpp"
#include "hive/partition.hpp"

namespace hive {

/// Combinatorial hive plot layout: axis assignment, cyclic axis order,
/// per-axis vertex order and the number of gaps per axis.
struct HiveLayout {
  std::size_t k = 0;
  std::vector<AxisId> alpha;           // vertex -> axis
  std::vector<std::size_t> phi;        // axis -> cyclic position
  std::vector<std::size_t> pi;         // vertex -> position on its axis
  std::size_t gaps = 1;

  std::size_t vertex_count() const { return alpha.size(); }

  /// Vertices of `axis` sorted by position. Assumes a valid pi.
  std::vector<VertexId> axis_sequence(AxisId axis) const;

  /// Axis sitting at cyclic position `position`.
  AxisId axis_at(std::size_t position) const;

  friend bool operator==(const HiveLayout&, const HiveLayout&) = default;
};

/// Layout with vertices grouped by `partition`, axis positions from `phi`
/// and vertex positions following vertex id order on each axis.
HiveLayout make_layout(const Partition& partition, std::vector<std::size_t> phi,
                       std::size_t gaps);

/// Cyclic distance between the axes in [0, k/2]. Throws HiveError for an
/// unknown axis.
std::size_t span(const HiveLayout& layout, AxisId i, AxisId j);

/// Same, on raw cyclic positions.
constexpr std::size_t cyclic_span(std::size_t pi, std::size_t pj, std::size_t k) {
  const std::size_t d = (pi + k - pj) % k;
  return d < k - d ? d : k - d;
}

struct ProperEdge {};
struct LongEdge {
  std::size_t span = 0;
};
struct IntraAxisEdge {};

using EdgeClass = std::variant<ProperEdge, LongEdge, IntraAxisEdge>;

/// Classifies by the span of the endpoints' axes. Throws HiveError for an
/// endpoint outside the layout.
EdgeClass classify_edge(const HiveLayout& layout, const Edge& edge);

const char* edge_class_name(const EdgeClass& cls);

struct EdgeClassCounts {
  std::size_t intra = 0;
  std::size_t proper = 0;
  std::size_t long_edges = 0;
  std::size_t long_span_total = 0;  // sum of spans over long edges
};

EdgeClassCounts count_edge_classes(const HiveLayout& layout, const Graph& graph);

}  // namespace hive
