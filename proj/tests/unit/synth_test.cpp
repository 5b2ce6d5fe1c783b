#include <gtest/gtest.h>

#include <sstream>

#include "hive/synth.hpp"

namespace hive {
namespace {

TEST(Synth, DefaultProbabilities) {
  const SynthConfig c;
  EXPECT_DOUBLE_EQ(c.intra_probability(60), 0.6);
  EXPECT_DOUBLE_EQ(c.inter_probability(60), 0.04);
  EXPECT_DOUBLE_EQ(c.intra_probability(510), 6.0 / 85.0);
  EXPECT_DOUBLE_EQ(c.inter_probability(510), 2.0 / 425.0);
  SynthConfig tiny;
  tiny.partitions = 2;
  EXPECT_DOUBLE_EQ(tiny.intra_probability(4), 1.0);  // clamped
}

TEST(Synth, NValues) {
  const SynthConfig c;
  const auto n = c.n_values();
  ASSERT_EQ(n.size(), 16u);
  EXPECT_EQ(n.front(), 60u);
  EXPECT_EQ(n.back(), 510u);
  EXPECT_EQ(n.size() * c.graphs_per_step * c.gap_values.size(), 240u);
}

TEST(Synth, ExtremeProbabilitiesGiveCliques) {
  SynthConfig c;
  c.p_in = 1.0;
  c.p_out = 0.0;
  const auto pg = random_partition_graph(c, 60, 5);
  EXPECT_EQ(pg.graph.edge_count(), 6u * 45u);
  for (const auto& e : pg.graph.edges()) EXPECT_EQ(pg.partition.group_of(e.u), pg.partition.group_of(e.v));
  EXPECT_EQ(pg.partition.group_count(), 6u);
  for (AxisId i = 0; i < 6; ++i) EXPECT_EQ(pg.partition.group(i).size(), 10u);
  c.p_in = 0.0;
  c.p_out = 1.0;
  EXPECT_EQ(random_partition_graph(c, 60, 5).graph.edge_count(), 60u * 59u / 2 - 6u * 45u);
}

std::vector<Edge> edges_of(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

TEST(Synth, Deterministic) {
  const SynthConfig c;
  const auto a = random_partition_graph(c, 90, 17);
  const auto b = random_partition_graph(c, 90, 17);
  EXPECT_EQ(edges_of(a.graph), edges_of(b.graph));
  EXPECT_NE(edges_of(a.graph), edges_of(random_partition_graph(c, 90, 18).graph));
}

TEST(Synth, RejectsIndivisibleSize) {
  EXPECT_THROW(random_partition_graph(SynthConfig{}, 61, 1), HiveError);
}

TEST(Synth, MeanDegreesNearExpectation) {
  const SynthConfig c;
  double intra = 0, inter = 0;
  constexpr int kSamples = 200;
  for (int s = 0; s < kSamples; ++s) {
    const auto pg = random_partition_graph(c, 60, static_cast<std::uint64_t>(s));
    for (const auto& e : pg.graph.edges()) (pg.partition.group_of(e.u) == pg.partition.group_of(e.v) ? intra : inter) += 2;
  }
  // Expected 9 * 0.6 = 5.4 and 50 * 0.04 = 2.0 per vertex.
  EXPECT_NEAR(intra / (60.0 * kSamples), 5.4, 0.15);
  EXPECT_NEAR(inter / (60.0 * kSamples), 2.0, 0.1);
}

SynthConfig small_config() {
  SynthConfig c;
  c.n_min = 60;
  c.n_max = 90;
  c.graphs_per_step = 2;
  return c;
}

TEST(Synth, ExperimentRecordsInOrder) {
  const auto records = run_gap_experiment(small_config());
  ASSERT_EQ(records.size(), 2u * 2u * 3u);
  std::size_t i = 0;
  for (std::size_t n : {60u, 90u}) {
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t g : {1u, 2u, 3u}) {
        EXPECT_EQ(records[i].n, n);
        EXPECT_EQ(records[i].replicate, r);
        EXPECT_EQ(records[i].g, g);
        EXPECT_EQ(records[i].seed, replicate_seed(small_config(), n, r));
        EXPECT_GE(records[i].wall_time_seconds, 0.0);
        EXPECT_GE(records[i].iterations, 1u);
        ++i;
      }
    }
  }
}

TEST(Synth, ThreadsDoNotChangeResults) {
  auto c = small_config();
  const auto serial = run_gap_experiment(c);
  c.threads = 4;
  const auto parallel = run_gap_experiment(c);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].inter_axis_crossings, parallel[i].inter_axis_crossings);
    EXPECT_EQ(serial[i].intra_axis_crossings, parallel[i].intra_axis_crossings);
    EXPECT_EQ(serial[i].iterations, parallel[i].iterations);
  }
}

TEST(Synth, Csv) {
  ExperimentRecord r;
  r.n = 60;
  r.g = 2;
  r.seed = 9;
  r.inter_axis_crossings = 12;
  r.intra_axis_crossings = 340;
  r.wall_time_seconds = 0.0125;
  r.iterations = 7;
  std::ostringstream out;
  write_experiment_csv(out, {r});
  EXPECT_EQ(out.str(), "n,g,seed,inter_crossings,intra_crossings,runtime_s,iterations\n60,2,9,12,340,0.012500,7\n");
}

}  // namespace
}  // namespace hive
