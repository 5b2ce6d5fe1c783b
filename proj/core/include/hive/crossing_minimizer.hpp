#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hive/augmented_layout.hpp"
#include "hive/crossings.hpp"
#include "hive/graph.hpp"
#include "hive/layout.hpp"

namespace hive {

/// Barycenter of a node over its link neighbors on both adjacent axes, each
/// neighbor contributing position / axis_size. A node without link
/// neighbors keeps its own normalized position.
double barycenter_position(NodeId node, const AugmentedLayout& layout);

/// Distributes a position-sorted axis sequence into gaps and segments.
///
/// g = 1: real vertices fill the single segment, dummies the trailing gap,
/// both in sequence order. g > 1: real vertices fill segment j until it
/// holds |V_i|/(g-1) of them, then j advances; each dummy goes to the gap
/// left or right of segment j, whichever yields fewer crossings against the
/// real vertices of segment j (ties go left). Dummy order is preserved.
AxisArrangement sort_axis_with_gaps(AxisId axis, std::span<const NodeId> sorted,
                                    const AugmentedLayout& layout);

enum class SweepDirection { kClockwise, kCounterClockwise };

struct PhaseStats {
  std::size_t iterations = 0;
  std::uint64_t initial_crossings = 0;
  std::uint64_t final_crossings = 0;
};

inline constexpr std::size_t kDefaultPhase1Iterations = 20;
inline constexpr std::size_t kDefaultPhase2Iterations = 10;

/// Alternating clockwise / counter-clockwise barycenter sweeps over all axes
/// until a full cycle changes nothing or `max_iterations` cycles ran.
/// Returns the layout with the fewest inter-axis crossings seen, including
/// the input.
AugmentedLayout phase1_minimize(const AugmentedLayout& layout,
                                std::size_t max_iterations = kDefaultPhase1Iterations,
                                PhaseStats* stats = nullptr);

/// Per-axis intra-edge barycenter with the relative order of dummies and of
/// vertices incident to inter-axis edges frozen. Returns, per axis, the
/// arrangement with the fewest intra-axis crossings seen.
AugmentedLayout phase2_intra(const AugmentedLayout& layout, const Graph& graph,
                             std::size_t max_iterations = kDefaultPhase2Iterations,
                             PhaseStats* stats = nullptr);

struct MinimizeOptions {
  std::size_t gaps = 1;
  std::size_t phase1_iterations = kDefaultPhase1Iterations;
  std::size_t phase2_iterations = kDefaultPhase2Iterations;
  std::uint64_t seed = 0;
};

struct MinimizeResult {
  AugmentedLayout layout;
  CrossingReport report;
  PhaseStats phase1;
  PhaseStats phase2;
};

/// Shuffles every axis with the seed, subdivides long edges and runs both
/// phases. `layout.alpha` and `layout.phi` are kept; `layout.gaps` is
/// replaced by `options.gaps`.
MinimizeResult minimize_crossings(const HiveLayout& layout, const Graph& graph,
                                  const MinimizeOptions& options);

}  // namespace hive
