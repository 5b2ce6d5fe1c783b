#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "hive/partition.hpp"
#include "random.hpp"

namespace hive {
namespace {

struct WeightedGraph {
  // Neighbor lists without self-loops; self_loops[v] is the internal weight.
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency;
  std::vector<double> self_loops;

  std::size_t size() const { return adjacency.size(); }
  double strength(std::uint32_t v) const {
    double s = 2.0 * self_loops[v];
    for (const auto& [u, w] : adjacency[v]) s += w;
    return s;
  }
};

constexpr double kEpsilon = 1e-12;

// Local moving until a full pass changes nothing. Returns true when any
// node changed community.
bool local_moves(const WeightedGraph& g, double two_m, detail::Rng& rng,
                 std::vector<std::uint32_t>& community) {
  const std::size_t n = g.size();
  std::vector<double> strength(n);
  std::vector<double> total(n, 0.0);
  for (std::uint32_t v = 0; v < n; ++v) {
    strength[v] = g.strength(v);
    total[community[v]] += strength[v];
  }

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  rng.shuffle(std::span<std::uint32_t>(order));

  std::vector<double> link_weight(n, 0.0);
  std::vector<bool> marked(n, false);
  std::vector<std::uint32_t> touched;
  bool any_move = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto v : order) {
      const auto own = community[v];
      touched.assign(1, own);
      marked[own] = true;
      for (const auto& [u, w] : g.adjacency[v]) {
        const auto c = community[u];
        if (!marked[c]) {
          marked[c] = true;
          touched.push_back(c);
        }
        link_weight[c] += w;
      }
      total[own] -= strength[v];

      // Modularity gain of inserting v into c, up to a positive factor.
      auto gain = [&](std::uint32_t c) { return link_weight[c] - total[c] * strength[v] / two_m; };
      auto best = own;
      double best_gain = gain(own);
      for (auto c : touched) {
        const double value = gain(c);
        if (value > best_gain + kEpsilon) {
          best = c;
          best_gain = value;
        }
      }
      total[best] += strength[v];
      for (auto c : touched) {
        link_weight[c] = 0.0;
        marked[c] = false;
      }
      if (best != own) {
        community[v] = best;
        moved = true;
        any_move = true;
      }
    }
  }
  return any_move;
}

// Dense relabeling of `community` by first appearance; returns the count.
std::size_t relabel(std::vector<std::uint32_t>& community) {
  std::vector<std::uint32_t> map(community.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (auto& c : community) {
    if (map[c] == UINT32_MAX) map[c] = next++;
    c = map[c];
  }
  return next;
}

WeightedGraph aggregate(const WeightedGraph& g, const std::vector<std::uint32_t>& community,
                        std::size_t count) {
  WeightedGraph out;
  out.adjacency.resize(count);
  out.self_loops.assign(count, 0.0);
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> between;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    out.self_loops[community[v]] += g.self_loops[v];
    for (const auto& [u, w] : g.adjacency[v]) {
      if (u < v) continue;
      const auto a = community[v];
      const auto b = community[u];
      if (a == b) {
        out.self_loops[a] += w;
      } else {
        between[std::minmax(a, b)] += w;
      }
    }
  }
  for (const auto& [pair, w] : between) {
    out.adjacency[pair.first].emplace_back(pair.second, w);
    out.adjacency[pair.second].emplace_back(pair.first, w);
  }
  return out;
}

}  // namespace

Partition partition_auto(const Graph& graph, std::uint64_t seed) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) throw HiveError("partition_auto: graph is empty");

  std::vector<std::uint32_t> assignment(n);
  std::iota(assignment.begin(), assignment.end(), 0u);
  if (graph.edge_count() == 0) return Partition(std::vector<AxisId>(assignment.begin(), assignment.end()));

  WeightedGraph level;
  level.adjacency.resize(n);
  level.self_loops.assign(n, 0.0);
  for (const auto& e : graph.edges()) {
    level.adjacency[e.u].emplace_back(e.v, 1.0);
    level.adjacency[e.v].emplace_back(e.u, 1.0);
  }
  const double two_m = 2.0 * static_cast<double>(graph.edge_count());
  detail::Rng rng(seed);

  while (true) {
    std::vector<std::uint32_t> community(level.size());
    std::iota(community.begin(), community.end(), 0u);
    if (!local_moves(level, two_m, rng, community)) break;
    const auto count = relabel(community);
    for (auto& a : assignment) a = community[a];
    if (count == level.size()) break;
    level = aggregate(level, community, count);
  }

  Partition result(std::vector<AxisId>(assignment.begin(), assignment.end()));
  return result.canonical();
}

}  // namespace hive
