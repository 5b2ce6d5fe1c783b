#include "hive/synth.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <ostream>
#include <string>
#include <thread>

#include "hive/axis_order.hpp"
#include "hive/crossing_minimizer.hpp"
#include "hive/layout.hpp"
#include "random.hpp"

namespace hive {
namespace {

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

void check_config(const SynthConfig& c) {
  if (c.partitions == 0) throw HiveError("synth: partition count must be positive");
  if (c.n_step == 0 && c.n_min != c.n_max) throw HiveError("synth: n step must be positive");
  if (c.n_min > c.n_max) throw HiveError("synth: n range is empty");
  if (c.gap_values.empty()) throw HiveError("synth: no gap values");
  for (auto g : c.gap_values) {
    if (g < 1) throw HiveError("synth: gap values must be at least 1");
  }
  for (auto p : {c.p_in, c.p_out}) {
    if (p && !(*p >= 0.0 && *p <= 1.0)) throw HiveError("synth: probabilities must lie in [0, 1]");
  }
}

std::size_t group_size(const SynthConfig& c, std::size_t n) {
  if (n == 0 || n % c.partitions != 0) {
    throw HiveError("synth: n = " + std::to_string(n) + " is not divisible by " +
                    std::to_string(c.partitions) + " groups");
  }
  return n / c.partitions;
}

}  // namespace

std::vector<std::size_t> SynthConfig::n_values() const {
  std::vector<std::size_t> out;
  if (n_min > n_max) return out;
  if (n_step == 0) return {n_min};
  for (std::size_t n = n_min; n <= n_max; n += n_step) out.push_back(n);
  return out;
}

double SynthConfig::intra_probability(std::size_t n) const {
  if (p_in) return *p_in;
  return clamp_probability(6.0 / static_cast<double>(group_size(*this, n)));
}

double SynthConfig::inter_probability(std::size_t n) const {
  if (p_out) return *p_out;
  const std::size_t outside = n - group_size(*this, n);
  if (outside == 0) return 0.0;
  return clamp_probability(2.0 / static_cast<double>(outside));
}

PartitionedGraph random_partition_graph(const SynthConfig& config, std::size_t n,
                                        std::uint64_t seed) {
  check_config(config);
  const std::size_t size = group_size(config, n);
  const double p_in = config.intra_probability(n);
  const double p_out = config.inter_probability(n);

  std::vector<AxisId> membership(n);
  for (std::size_t v = 0; v < n; ++v) membership[v] = static_cast<AxisId>(v / size);

  detail::Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const double p = membership[u] == membership[v] ? p_in : p_out;
      if (rng.bernoulli(p)) edges.push_back(Edge{u, v});
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = "v" + std::to_string(v);
  return {Graph(std::move(labels), std::move(edges)), Partition(std::move(membership))};
}

std::uint64_t replicate_seed(const SynthConfig& config, std::size_t n, std::size_t replicate) {
  return detail::derive_seed(detail::derive_seed(config.seed, n), replicate);
}

std::vector<ExperimentRecord> run_gap_experiment(const SynthConfig& config) {
  check_config(config);
  struct Cell {
    std::size_t n;
    std::size_t replicate;
  };
  std::vector<Cell> cells;
  for (auto n : config.n_values()) {
    group_size(config, n);
    for (std::size_t r = 0; r < config.graphs_per_step; ++r) cells.push_back({n, r});
  }
  const std::size_t per_cell = config.gap_values.size();
  std::vector<ExperimentRecord> records(cells.size() * per_cell);

  auto run_cell = [&](std::size_t index) {
    const auto [n, replicate] = cells[index];
    const auto seed = replicate_seed(config, n, replicate);
    const auto generated = random_partition_graph(config, n, seed);
    for (std::size_t gi = 0; gi < per_cell; ++gi) {
      const std::size_t g = config.gap_values[gi];
      const auto start = std::chrono::steady_clock::now();
      const auto weights = inter_group_weights(generated.graph, generated.partition);
      const auto order = optimize_axis_order(weights, seed);
      const auto layout = make_layout(generated.partition, order.position, g);
      const auto result = minimize_crossings(
          layout, generated.graph,
          MinimizeOptions{g, config.phase1_iterations, config.phase2_iterations, seed});
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

      auto& rec = records[index * per_cell + gi];
      rec.n = n;
      rec.g = g;
      rec.replicate = replicate;
      rec.seed = seed;
      rec.inter_axis_crossings = result.report.inter_axis;
      rec.intra_axis_crossings = result.report.intra_axis;
      rec.wall_time_seconds = elapsed.count();
      rec.iterations = result.phase1.iterations + result.phase2.iterations;
    }
  };

  const std::size_t threads = std::min(std::max<std::size_t>(config.threads, 1), cells.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells.size() && !failed; i = next++) {
        try {
          run_cell(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "n,g,seed,inter_crossings,intra_crossings,runtime_s,iterations\n";
  for (const auto& r : records) {
    char runtime[32];
    std::snprintf(runtime, sizeof runtime, "%.6f", r.wall_time_seconds);
    out << r.n << ',' << r.g << ',' << r.seed << ',' << r.inter_axis_crossings << ','
        << r.intra_axis_crossings << ',' << runtime << ',' << r.iterations << '\n';
  }
}

}  // namespace hive
