#include "hive/pipeline.hpp"

#include <chrono>

namespace hive {

const char* partition_source_name(PartitionSource source) {
  switch (source) {
    case PartitionSource::kInput:
      return "input";
    case PartitionSource::kGreedyModularity:
      return "greedy-modularity";
    case PartitionSource::kLouvain:
      return "louvain";
  }
  return "unknown";
}

PipelineResult run_layout_pipeline(const Graph& graph, const std::optional<Partition>& given,
                                   const PipelineOptions& options) {
  if (options.gaps < 1) throw HiveError("gap count must be at least 1");
  if (graph.vertex_count() == 0) throw HiveError("graph has no vertices");
  const auto start = std::chrono::steady_clock::now();

  PipelineResult result;
  if (given) {
    if (given->vertex_count() != graph.vertex_count()) {
      throw HiveError("partition covers " + std::to_string(given->vertex_count()) +
                      " vertices, graph has " + std::to_string(graph.vertex_count()));
    }
    result.partition = *given;
    result.partition_source = PartitionSource::kInput;
  } else if (options.k) {
    if (*options.k < 1 || *options.k > graph.vertex_count()) {
      throw HiveError("k must lie in [1, |V|]");
    }
    result.partition = partition_with_k(graph, *options.k);
    result.partition_source = PartitionSource::kGreedyModularity;
  } else {
    result.partition = partition_auto(graph, options.seed);
    result.partition_source = PartitionSource::kLouvain;
  }

  const std::size_t k = result.partition.group_count();
  const auto weights = inter_group_weights(graph, result.partition);
  result.order_exact = k <= options.brute_force_threshold;
  result.order = k < 2 ? AxisOrder::identity(k)
                       : optimize_axis_order(weights, options.seed, options.brute_force_threshold,
                                             options.anneal);

  const auto layout = make_layout(result.partition, result.order.position, options.gaps);
  result.minimized = minimize_crossings(
      layout, graph,
      MinimizeOptions{options.gaps, options.phase1_iterations, options.phase2_iterations,
                      options.seed});
  result.classes = count_edge_classes(result.minimized.layout.base(), graph);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  result.elapsed_seconds = elapsed.count();
  return result;
}

}  // namespace hive
