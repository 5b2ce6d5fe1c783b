#include <benchmark/benchmark.h>

#include <random>

#include "hive/axis_order.hpp"
#include "hive/crossing_minimizer.hpp"
#include "hive/crossings.hpp"
#include "hive/graph_io.hpp"
#include "hive/pipeline.hpp"
#include "hive/render.hpp"
#include "hive/synth.hpp"

namespace {

using namespace hive;

WeightMatrix random_weights(std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> weight(0, 20);
  WeightMatrix w(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) w.set(i, j, weight(rng));
  return w;
}

void BM_BruteForceOrder(benchmark::State& state) {
  const auto w = random_weights(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_order(w));
}
BENCHMARK(BM_BruteForceOrder)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_AnnealOrder(benchmark::State& state) {
  const auto w = random_weights(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(anneal_order(w, 7));
}
BENCHMARK(BM_AnnealOrder)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

// Synthetic graph with k = 6 groups; range(0) = n, range(1) = g.
void BM_MinimizeCrossings(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = static_cast<std::size_t>(state.range(1));
  const auto pg = random_partition_graph(SynthConfig{}, n, 3);
  const auto order = optimize_axis_order(inter_group_weights(pg.graph, pg.partition), 3);
  const auto layout = make_layout(pg.partition, order.position, g);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_crossings(layout, pg.graph, {g, 20, 10, 3}));
}
BENCHMARK(BM_MinimizeCrossings)
    ->ArgsProduct({{60, 240, 510}, {1, 2, 3}})
    ->Unit(benchmark::kMillisecond);

void BM_CountCrossings(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pg = random_partition_graph(SynthConfig{}, n, 4);
  const auto layout = make_layout(pg.partition, {0, 1, 2, 3, 4, 5}, 2);
  const auto al = subdivide_long_edges(pg.graph, layout);
  for (auto _ : state) benchmark::DoNotOptimize(count_crossings(al, pg.graph));
}
BENCHMARK(BM_CountCrossings)->Arg(60)->Arg(510)->Unit(benchmark::kMicrosecond);

void BM_CaseStudyPipeline(benchmark::State& state) {
  const auto built = load_graph(HIVEPLOT_DATA_DIR "/coauthor_75.json", GraphFormat::kJson);
  PipelineOptions options;
  options.gaps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_layout_pipeline(built.graph, built.partition, options));
}
BENCHMARK(BM_CaseStudyPipeline)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_RenderCaseStudy(benchmark::State& state) {
  const auto built = load_graph(HIVEPLOT_DATA_DIR "/coauthor_75.json", GraphFormat::kJson);
  const auto result = run_layout_pipeline(built.graph, built.partition, PipelineOptions{});
  RenderStyle style;
  for (auto _ : state) {
    const auto geometry = place_labels(compute_geometry(result.minimized.layout, built.graph, style), built.graph, style);
    benchmark::DoNotOptimize(render_svg(geometry, style));
    benchmark::DoNotOptimize(
        export_layout_json(result.minimized.layout, built.graph, geometry, LayoutMeta{1, result.minimized.report}));
  }
}
BENCHMARK(BM_RenderCaseStudy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
