#pragma once

#include <cstddef>
#include <cstdint>

#include "hive/augmented_layout.hpp"
#include "hive/graph.hpp"
#include "hive/layout.hpp"

namespace hive {

struct CrossingReport {
  std::uint64_t inter_axis = 0;
  std::uint64_t intra_axis = 0;

  friend bool operator==(const CrossingReport&, const CrossingReport&) = default;
};

/// Crossings among the links of the subdivided graph: two links between the
/// same pair of adjacent axes cross when their endpoints interleave in
/// drawing order. Links sharing an endpoint never cross.
std::uint64_t count_inter_axis_crossings(const AugmentedLayout& layout);

/// Crossings among links between the axes at cyclic positions p and p+1.
std::uint64_t count_inter_axis_crossings_between(const AugmentedLayout& layout,
                                                 AxisId a, AxisId b);

/// Intra-axis crossings in the duplicated-axis drawing: each intra edge goes
/// from its lower-pi endpoint on the clockwise copy to the other endpoint on
/// the counter-clockwise copy, so two edges cross iff their intervals nest.
std::uint64_t count_intra_axis_crossings(const HiveLayout& layout, const Graph& graph);

/// Same, restricted to one axis.
std::uint64_t count_intra_axis_crossings_on_axis(const HiveLayout& layout,
                                                 const Graph& graph, AxisId axis);

CrossingReport count_crossings(const AugmentedLayout& layout, const Graph& graph);

}  // namespace hive
