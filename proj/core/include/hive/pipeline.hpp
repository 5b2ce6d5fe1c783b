#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "hive/axis_order.hpp"
#include "hive/crossing_minimizer.hpp"
#include "hive/graph.hpp"
#include "hive/layout.hpp"
#include "hive/partition.hpp"

namespace hive {

struct PipelineOptions {
  /// Axis count; Louvain decides when unset. Ignored if a partition is given.
  std::optional<std::size_t> k;
  std::size_t gaps = 1;
  std::uint64_t seed = 1;
  std::size_t phase1_iterations = kDefaultPhase1Iterations;
  std::size_t phase2_iterations = kDefaultPhase2Iterations;
  std::size_t brute_force_threshold = kDefaultBruteForceCap;
  AnnealSchedule anneal;
};

enum class PartitionSource { kInput, kGreedyModularity, kLouvain };

const char* partition_source_name(PartitionSource source);

struct PipelineResult {
  Partition partition;
  PartitionSource partition_source = PartitionSource::kInput;
  AxisOrder order;
  bool order_exact = true;  // brute force (true) or annealing
  MinimizeResult minimized;
  EdgeClassCounts classes;
  double elapsed_seconds = 0.0;
};

/// Partition (unless given), order the axes, minimize crossings.
PipelineResult run_layout_pipeline(const Graph& graph,
                                   const std::optional<Partition>& given,
                                   const PipelineOptions& options);

}  // namespace hive
