// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every bound used below is pinned in this file.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "geometry_checks.hpp"
#include "hive/crossing_minimizer.hpp"
#include "hive/crossings.hpp"
#include "hive/graph_io.hpp"
#include "hive/pipeline.hpp"
#include "hive/render.hpp"
#include "hive/synth.hpp"
#include "hive/validate.hpp"
#include "test_support.hpp"

namespace {

using namespace hive;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kCrossingOracleSeconds = 10.0;
constexpr int kAnnealExactRequired = 95;
constexpr double kAnnealRelativeSlack = 0.05;
constexpr double kBruteForceK8Seconds = 5.0;
constexpr double kIntraRelativeSpread = 0.5;
constexpr double kGapExperimentSeconds = 300.0;
constexpr double kCaseStudySeconds = 1.0;
constexpr double kGeneratorRelative = 0.05;
constexpr int kPathSamples = 64;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

Verdict crossing_oracle() {
  testing::Engine rng(20240601);
  const auto start = Clock::now();
  int mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = testing::draw(rng, 3, 6);
    const std::size_t g = testing::draw(rng, 1, 3);
    const std::size_t n = testing::draw(rng, k, 40);
    const auto graph = testing::random_graph(n, testing::draw(rng, 5, 30) / 100.0, rng);
    const auto layout = make_layout(testing::random_partition(n, k, rng), testing::random_phi(k, rng), g);
    const auto al = testing::random_augmented(graph, layout, rng);
    if (count_inter_axis_crossings(al) != testing::oracle_inter_crossings(al, graph)) ++mismatches;
  }
  const double elapsed = seconds_since(start);
  return {mismatches == 0 && elapsed < kCrossingOracleSeconds,
          "100 layouts, " + std::to_string(mismatches) + " mismatches, " + fmt("%.2f s", elapsed)};
}

Verdict axis_order_oracle() {
  testing::Engine rng(777);
  int brute_mismatch = 0, exact = 0, near = 0;
  double slowest_k8 = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = testing::draw(rng, 4, 8);
    const auto w = testing::random_weights(k, 20, rng);
    const auto start = Clock::now();
    const auto brute = brute_force_order(w);
    if (k == 8) slowest_k8 = std::max(slowest_k8, seconds_since(start));
    const auto optimum = testing::oracle_min_order_cost(w);
    if (order_cost(w, brute) != optimum) ++brute_mismatch;
    const auto annealed = order_cost(w, anneal_order(w, static_cast<std::uint64_t>(trial) + 1));
    if (annealed == optimum) {
      ++exact;
    } else if (static_cast<double>(annealed) <= (1.0 + kAnnealRelativeSlack) * static_cast<double>(optimum)) {
      ++near;
    }
  }
  const bool pass = brute_mismatch == 0 && exact >= kAnnealExactRequired && exact + near == 100 &&
                    slowest_k8 < kBruteForceK8Seconds;
  return {pass, "brute-force mismatches " + std::to_string(brute_mismatch) + ", anneal exact " +
                    std::to_string(exact) + "/100, within 5% " + std::to_string(near) +
                    ", slowest k=8 brute force " + fmt("%.3f s", slowest_k8)};
}

Verdict gap_trend() {
  SynthConfig config;
  config.n_min = 60;
  config.n_max = 240;
  config.n_step = 30;
  config.partitions = 6;
  config.graphs_per_step = 5;
  config.gap_values = {1, 2, 3};
  const auto start = Clock::now();
  const auto records = run_gap_experiment(config);
  const double elapsed = seconds_since(start);

  std::map<std::size_t, std::map<std::size_t, std::pair<double, double>>> sums;  // n -> g -> (inter, intra)
  for (const auto& r : records) {
    auto& s = sums[r.n][r.g];
    s.first += static_cast<double>(r.inter_axis_crossings);
    s.second += static_cast<double>(r.intra_axis_crossings);
  }
  bool pass = elapsed < kGapExperimentSeconds && sums.size() == config.n_values().size();
  double worst_spread = 0.0;
  std::string detail;
  for (const auto& [n, by_g] : sums) {
    const double i1 = by_g.at(1).first, i2 = by_g.at(2).first, i3 = by_g.at(3).first;
    if (!(i2 < i1 && i3 < i1)) {
      pass = false;
      detail += " n=" + std::to_string(n) + " inter g1/g2/g3 " + fmt("%.0f", i1) + "/" + fmt("%.0f", i2) + "/" +
                fmt("%.0f", i3);
    }
    double lo = by_g.at(1).second, hi = lo;
    for (const auto& [g, s] : by_g) {
      lo = std::min(lo, s.second);
      hi = std::max(hi, s.second);
    }
    // Relative spread of the mean intra counts, measured against the smallest.
    const double spread = lo > 0 ? (hi - lo) / lo : (hi > 0 ? 1e9 : 0.0);
    worst_spread = std::max(worst_spread, spread);
    if (spread >= kIntraRelativeSpread) pass = false;
  }
  return {pass, std::to_string(records.size()) + " runs, worst intra spread " + fmt("%.3f", worst_spread) +
                    ", " + fmt("%.2f s", elapsed) + detail};
}

Verdict case_study() {
  const auto built = load_graph(HIVEPLOT_DATA_DIR "/coauthor_75.json", GraphFormat::kJson);
  const auto start = Clock::now();
  const auto result = run_layout_pipeline(built.graph, built.partition, PipelineOptions{});
  const double elapsed = seconds_since(start);
  const auto& c = result.classes;
  const bool pass = built.graph.vertex_count() == 75 && built.graph.edge_count() == 190 &&
                    built.partition && built.partition->group_count() == 7 && c.intra == 172 &&
                    c.proper == 12 && c.long_edges == 6 && elapsed < kCaseStudySeconds;
  return {pass, "intra " + std::to_string(c.intra) + ", proper " + std::to_string(c.proper) + ", long " +
                    std::to_string(c.long_edges) + ", pipeline " + fmt("%.4f s", elapsed)};
}

std::vector<NodeId> dummies_of(const AugmentedLayout& al, const std::vector<NodeId>& order) {
  std::vector<NodeId> out;
  for (auto v : order) {
    if (al.is_dummy(v)) out.push_back(v);
  }
  return out;
}

Verdict invariant_arrangements() {
  testing::Engine rng(101);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t k = testing::draw(rng, 3, 7);
    const std::size_t g = testing::draw(rng, 1, 4);
    const std::size_t n = testing::draw(rng, k, 36);
    const auto graph = testing::random_graph(n, 0.2, rng);
    const auto layout = make_layout(testing::random_partition(n, k, rng), testing::random_phi(k, rng), g);
    auto al = testing::random_augmented(graph, layout, rng);
    const auto axis = static_cast<AxisId>(testing::draw(rng, 0, k - 1));
    auto sorted = al.arrangement(axis).drawing_order();
    std::shuffle(sorted.begin(), sorted.end(), rng);
    const auto arr = sort_axis_with_gaps(axis, sorted, al);
    bool ok = dummies_of(al, arr.drawing_order()) == dummies_of(al, sorted);
    al.set_arrangement(axis, arr);
    ok = ok && validate_layout(al, graph).empty();
    failures += !ok;
  }
  return {failures == 0, "1000 random axes, " + std::to_string(failures) + " violations"};
}

Verdict invariant_monotone() {
  testing::Engine rng(202);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = testing::draw(rng, 2, 6);
    const std::size_t g = testing::draw(rng, 1, 3);
    const std::size_t n = testing::draw(rng, std::max<std::size_t>(k, 10), 50);
    const auto graph = testing::random_graph(n, 0.15, rng);
    const auto layout = make_layout(testing::random_partition(n, k, rng), testing::random_phi(k, rng), g);
    const auto al = testing::random_augmented(graph, layout, rng);
    const auto p1 = phase1_minimize(al);
    const auto p2 = phase2_intra(p1, graph);
    const bool ok = count_inter_axis_crossings(p1) <= count_inter_axis_crossings(al) &&
                    count_intra_axis_crossings(p2.base(), graph) <= count_intra_axis_crossings(p1.base(), graph);
    failures += !ok;
  }
  return {failures == 0, "200 instances, " + std::to_string(failures) + " increases"};
}

Verdict invariant_frozen() {
  testing::Engine rng(303);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = testing::draw(rng, 2, 6);
    const std::size_t g = testing::draw(rng, 1, 3);
    const std::size_t n = testing::draw(rng, std::max<std::size_t>(k, 10), 50);
    const auto graph = testing::random_graph(n, 0.15, rng);
    const auto layout = make_layout(testing::random_partition(n, k, rng), testing::random_phi(k, rng), g);
    const auto al = testing::random_augmented(graph, layout, rng);
    const auto out = phase2_intra(al, graph);
    bool ok = true;
    for (AxisId a = 0; a < k && ok; ++a) {
      // Compare relative order of every frozen pair through positions.
      std::vector<NodeId> frozen;
      for (auto v : al.arrangement(a).drawing_order()) {
        if (al.is_dummy(v) || !al.neighbors(v).empty()) frozen.push_back(v);
      }
      for (std::size_t i = 0; i < frozen.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < frozen.size() && ok; ++j) {
          ok = out.position(frozen[i]) < out.position(frozen[j]);
        }
      }
    }
    failures += !ok;
  }
  return {failures == 0, "200 instances, " + std::to_string(failures) + " reordered frozen pairs"};
}

struct Rendered {
  std::string json;
  std::string svg;
};

Rendered render_once(const Graph& graph, const std::optional<Partition>& partition, const PipelineOptions& options,
                     const RenderStyle& style) {
  const auto result = run_layout_pipeline(graph, partition, options);
  const auto geometry = place_labels(compute_geometry(result.minimized.layout, graph, style), graph, style);
  return {export_layout_json(result.minimized.layout, graph, geometry, LayoutMeta{options.seed, result.minimized.report}),
          render_svg(geometry, style)};
}

Verdict invariant_determinism() {
  const auto built = load_graph(HIVEPLOT_DATA_DIR "/coauthor_75.json", GraphFormat::kJson);
  testing::Engine rng(404);
  int differing = 0, runs = 0;
  for (std::size_t g = 1; g <= 3; ++g) {
    PipelineOptions options;
    options.gaps = g;
    options.seed = 17 + g;
    RenderStyle style;
    style.expanded_axes = {static_cast<AxisId>(g)};
    style.symmetric_intra = g == 2;
    const auto a = render_once(built.graph, built.partition, options, style);
    const auto b = render_once(built.graph, built.partition, options, style);
    differing += a.json != b.json || a.svg != b.svg;
    ++runs;
  }
  // Partition chosen by the engine as well.
  const auto graph = testing::random_graph(80, 0.06, rng);
  for (std::optional<std::size_t> k : {std::optional<std::size_t>{}, std::optional<std::size_t>{9}}) {
    PipelineOptions options;
    options.k = k;
    options.gaps = 2;
    options.seed = 5;
    const auto a = render_once(graph, std::nullopt, options, {});
    const auto b = render_once(graph, std::nullopt, options, {});
    differing += a.json != b.json || a.svg != b.svg;
    ++runs;
  }
  return {differing == 0, std::to_string(runs) + " configurations, " + std::to_string(differing) + " differ"};
}

Verdict invariant_axis_intersections() {
  testing::Engine rng(505);
  std::size_t hits = 0, paths = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = testing::draw(rng, 3, 8);
    const std::size_t n = testing::draw(rng, 20, 60);
    const auto graph = testing::random_graph(n, testing::draw(rng, 5, 15) / 100.0, rng);
    PipelineOptions options;
    options.k = k;
    options.gaps = testing::draw(rng, 1, 3);
    options.seed = rng();
    const auto result = run_layout_pipeline(graph, std::nullopt, options);
    RenderStyle style;
    if (trial % 3 == 1) style.expanded_axes = {0};
    if (trial % 3 == 2) {
      for (AxisId a = 0; a < k; ++a) style.expanded_axes.insert(a);
      style.symmetric_intra = true;
    }
    const auto geometry = compute_geometry(result.minimized.layout, graph, style);
    for (const auto& e : geometry.edges) paths += !e.path.empty();
    hits += testing::count_axis_hits(geometry, kPathSamples);
  }
  return {hits == 0, "50 layouts, " + std::to_string(paths) + " paths, " + std::to_string(hits) + " axis hits"};
}

Verdict generator_statistics() {
  const SynthConfig config;
  constexpr std::size_t n = 60;
  constexpr int samples = 1000;
  double intra = 0.0, inter = 0.0;
  for (int s = 0; s < samples; ++s) {
    const auto pg = random_partition_graph(config, n, static_cast<std::uint64_t>(s) + 1);
    for (const auto& e : pg.graph.edges()) {
      (pg.partition.group_of(e.u) == pg.partition.group_of(e.v) ? intra : inter) += 2.0;
    }
  }
  intra /= static_cast<double>(n) * samples;
  inter /= static_cast<double>(n) * samples;
  // Expectations: (n/k - 1) * 6/(n/k) = 5.4 and (n - n/k) * 2/(n - n/k) = 2.0.
  const double want_intra = (10.0 - 1.0) * 0.6, want_inter = 50.0 * 0.04;
  const bool pass = std::abs(intra - want_intra) <= kGeneratorRelative * want_intra &&
                    std::abs(inter - want_inter) <= kGeneratorRelative * want_inter;
  return {pass, "mean intra-degree " + fmt("%.3f", intra) + " (5.4), inter-degree " + fmt("%.3f", inter) + " (2.0)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"crossing oracle equivalence", crossing_oracle},
      {"axis order oracle equivalence", axis_order_oracle},
      {"gap experiment trend", gap_trend},
      {"case study pipeline", case_study},
      {"invariants (a) gap arrangements", invariant_arrangements},
      {"invariants (b) best-seen monotonicity", invariant_monotone},
      {"invariants (c) frozen subsequence", invariant_frozen},
      {"invariants (d) byte determinism", invariant_determinism},
      {"invariants (e) no edge crosses an axis", invariant_axis_intersections},
      {"generator statistics", generator_statistics},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s  %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
