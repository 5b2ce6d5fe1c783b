#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hive/graph.hpp"
#include "hive/layout.hpp"

namespace hive {

/// Item on an axis: real vertices keep their VertexId, dummies are numbered
/// from |V| upwards.
using NodeId = std::uint32_t;

struct DummyVertex {
  NodeId id = 0;
  AxisId axis = 0;
  std::size_t edge = 0;   // index of the originating long edge in the graph
  std::size_t index = 0;  // 1-based position along the routed chain

  friend bool operator==(const DummyVertex&, const DummyVertex&) = default;
};

/// A long edge routed along the shorter cyclic direction. `chain` runs from
/// `from` through the dummies to `to`; for a span tie (k even, span k/2) the
/// route goes clockwise (increasing axis position) from the endpoint on the
/// lower-positioned axis.
struct LongEdgeRoute {
  std::size_t edge = 0;
  std::vector<NodeId> chain;
};

/// Proper edge of the subdivided graph (original proper edge or one link of
/// a long-edge chain). `edge` is the originating graph edge.
struct Link {
  NodeId a = 0;
  NodeId b = 0;
  std::size_t edge = 0;
};

/// Per-axis drawing order split into gap lists (dummies) and segment lists
/// (real vertices).
///
/// With g gaps there are g gap lists and g-1 segment lists, drawn inside-out
/// as gap 0, segment 0, gap 1, ..., segment g-2, gap g-1. With g = 1 there
/// is one segment followed by one trailing gap.
struct AxisArrangement {
  std::vector<std::vector<NodeId>> gaps;
  std::vector<std::vector<NodeId>> segments;

  static AxisArrangement empty(std::size_t gap_count);

  std::vector<NodeId> drawing_order() const;
  std::size_t item_count() const;

  friend bool operator==(const AxisArrangement&, const AxisArrangement&) = default;
};

/// Hive layout after long-edge subdivision.
///
/// The subdivided topology (dummies, links, adjacency) is shared between
/// copies; only the per-axis arrangements are per value. `base().pi` always
/// reflects the order of real vertices in the current arrangements.
class AugmentedLayout {
 public:
  AugmentedLayout() = default;

  /// Rebuilds the topology for `graph` under `base` and installs the given
  /// arrangements verbatim (no validation; see validate_layout).
  AugmentedLayout(const Graph& graph, HiveLayout base,
                  std::vector<AxisArrangement> arrangement);

  const HiveLayout& base() const { return base_; }
  std::size_t gaps() const { return base_.gaps; }
  std::size_t axis_count() const { return base_.k; }

  std::size_t real_count() const { return base_.alpha.size(); }
  std::size_t node_count() const { return real_count() + dummies().size(); }
  bool is_dummy(NodeId node) const { return node >= real_count(); }
  const DummyVertex& dummy(NodeId node) const {
    return topology_->dummies[node - real_count()];
  }
  std::span<const DummyVertex> dummies() const { return topology_->dummies; }
  std::span<const LongEdgeRoute> routes() const { return topology_->routes; }

  AxisId axis_of(NodeId node) const;

  /// Links of the subdivided graph; all have span 1.
  std::span<const Link> links() const { return topology_->links; }
  /// Graph edge indices whose endpoints share an axis.
  std::span<const std::size_t> intra_edges() const { return topology_->intra_edges; }
  /// Link neighbors of a node (on adjacent axes).
  std::span<const NodeId> neighbors(NodeId node) const {
    const auto& t = *topology_;
    return {t.adjacency.data() + t.offsets[node], t.adjacency.data() + t.offsets[node + 1]};
  }

  const std::vector<AxisArrangement>& arrangement() const { return arrangement_; }
  const AxisArrangement& arrangement(AxisId axis) const { return arrangement_.at(axis); }

  /// Drawing-order index of a node on its axis.
  std::size_t position(NodeId node) const { return position_.at(node); }
  /// Number of items (real + dummy) drawn on the axis.
  std::size_t axis_size(AxisId axis) const { return axis_size_.at(axis); }
  /// position / axis_size, in [0, 1).
  double normalized_position(NodeId node) const;

  /// Replaces one axis arrangement and refreshes positions and base().pi.
  void set_arrangement(AxisId axis, AxisArrangement arrangement);

  friend bool operator==(const AugmentedLayout& a, const AugmentedLayout& b) {
    return a.base_ == b.base_ && a.arrangement_ == b.arrangement_;
  }

 private:
  struct Topology {
    std::vector<DummyVertex> dummies;
    std::vector<LongEdgeRoute> routes;
    std::vector<Link> links;
    std::vector<std::size_t> intra_edges;
    std::vector<std::size_t> offsets{0};
    std::vector<NodeId> adjacency;
  };

  static std::shared_ptr<const Topology> build_topology(const Graph& graph,
                                                        const HiveLayout& base);
  void refresh_axis(AxisId axis);

  HiveLayout base_;
  std::shared_ptr<const Topology> topology_ = std::make_shared<Topology>();
  std::vector<AxisArrangement> arrangement_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> axis_size_;
};

/// Replaces every long edge by a chain of dummies on the intermediate axes.
/// Real vertices keep their base order in the segment lists (filled evenly
/// for g > 1); dummies are appended to the outermost gap in id order.
AugmentedLayout subdivide_long_edges(const Graph& graph, const HiveLayout& layout);

}  // namespace hive
