#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hive/graph.hpp"
#include "hive/partition.hpp"

namespace hive {

struct SynthConfig {
  std::size_t n_min = 60;
  std::size_t n_max = 510;
  std::size_t n_step = 30;
  std::size_t partitions = 6;
  std::size_t graphs_per_step = 5;
  std::vector<std::size_t> gap_values{1, 2, 3};
  std::uint64_t seed = 1;
  /// Overrides for the default rules p_in = 6/|V_i|, p_out = 2/(n - |V_i|).
  std::optional<double> p_in;
  std::optional<double> p_out;
  std::size_t phase1_iterations = 20;
  std::size_t phase2_iterations = 10;
  /// Worker threads; 1 runs cells sequentially (use for timing runs).
  std::size_t threads = 1;

  std::vector<std::size_t> n_values() const;
  double intra_probability(std::size_t n) const;
  double inter_probability(std::size_t n) const;
};

struct PartitionedGraph {
  Graph graph;
  Partition partition;
};

/// Random partition graph: `partitions` equal groups, intra-group pairs
/// joined with p_in and inter-group pairs with p_out. Throws HiveError when
/// n is not divisible by the group count.
PartitionedGraph random_partition_graph(const SynthConfig& config, std::size_t n,
                                        std::uint64_t seed);

struct ExperimentRecord {
  std::size_t n = 0;
  std::size_t g = 0;
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  std::uint64_t inter_axis_crossings = 0;
  std::uint64_t intra_axis_crossings = 0;
  double wall_time_seconds = 0.0;
  std::size_t iterations = 0;
};

/// Seed of replicate r at size n, derived from the config seed.
std::uint64_t replicate_seed(const SynthConfig& config, std::size_t n, std::size_t replicate);

/// Runs every (n, replicate, g) cell with k = partitions: the generator's
/// partition is used directly, axes are ordered and crossings minimized.
/// Wall time covers axis ordering and crossing minimization only. Records
/// come back in (n, replicate, g) order regardless of threading.
std::vector<ExperimentRecord> run_gap_experiment(const SynthConfig& config);

/// CSV with header n,g,seed,inter_crossings,intra_crossings,runtime_s,iterations.
void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

}  // namespace hive
