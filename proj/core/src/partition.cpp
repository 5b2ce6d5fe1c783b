#include "hive/partition.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace hive {

Partition::Partition(std::vector<AxisId> membership) : membership_(std::move(membership)) {
  std::size_t k = 0;
  for (auto g : membership_) k = std::max<std::size_t>(k, g + 1);
  groups_.resize(k);
  for (VertexId v = 0; v < membership_.size(); ++v) groups_[membership_[v]].push_back(v);
  for (std::size_t i = 0; i < k; ++i) {
    if (groups_[i].empty()) {
      throw HiveError("partition group " + std::to_string(i) + " is empty");
    }
  }
}

Partition Partition::canonical() const {
  std::vector<AxisId> relabel(groups_.size(), 0);
  std::vector<AxisId> by_first(groups_.size());
  for (AxisId i = 0; i < groups_.size(); ++i) by_first[i] = i;
  std::sort(by_first.begin(), by_first.end(),
            [&](AxisId a, AxisId b) { return groups_[a].front() < groups_[b].front(); });
  for (AxisId i = 0; i < by_first.size(); ++i) relabel[by_first[i]] = i;
  std::vector<AxisId> membership(membership_.size());
  for (VertexId v = 0; v < membership_.size(); ++v) membership[v] = relabel[membership_[v]];
  return Partition(std::move(membership));
}

double modularity(const Graph& graph, const Partition& partition) {
  const auto m = static_cast<double>(graph.edge_count());
  if (m == 0.0) return 0.0;
  std::vector<double> internal(partition.group_count(), 0.0);
  std::vector<double> degree(partition.group_count(), 0.0);
  for (const auto& e : graph.edges()) {
    const auto a = partition.group_of(e.u);
    const auto b = partition.group_of(e.v);
    if (a == b) internal[a] += 1.0;
    degree[a] += 1.0;
    degree[b] += 1.0;
  }
  double q = 0.0;
  for (std::size_t c = 0; c < internal.size(); ++c) {
    const double share = degree[c] / (2.0 * m);
    q += internal[c] / m - share * share;
  }
  return q;
}

Partition partition_with_k(const Graph& graph, std::size_t k, const MergeObserver& observer) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) throw HiveError("partition_with_k: graph is empty");
  if (k == 0 || k > n) {
    throw HiveError("partition_with_k: k must lie in [1, " + std::to_string(n) + "]");
  }
  const auto two_m = static_cast<std::int64_t>(2 * graph.edge_count());

  // Slot ids start as vertex ids; a merge keeps the smaller id, which is
  // therefore always the smallest vertex of its community.
  std::vector<std::map<std::uint32_t, std::int64_t>> between(n);
  std::vector<std::int64_t> degree(n, 0);
  for (const auto& e : graph.edges()) {
    between[e.u][e.v] += 1;
    between[e.v][e.u] += 1;
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<bool> alive(n, true);
  std::vector<std::vector<VertexId>> members(n);
  for (VertexId v = 0; v < n; ++v) members[v] = {v};

  // dQ * 2 m^2 = 2m * L_ij - D_i * D_j (exact in integers).
  auto gain = [&](std::uint32_t i, std::uint32_t j, std::int64_t links) {
    return two_m * links - degree[i] * degree[j];
  };

  for (std::size_t communities = n; communities > k; --communities) {
    constexpr auto kNone = std::numeric_limits<std::int64_t>::min();
    std::int64_t best = kNone;
    std::uint32_t best_i = 0;
    std::uint32_t best_j = 0;
    auto consider = [&](std::uint32_t i, std::uint32_t j, std::int64_t value) {
      if (value > best || (value == best && std::pair(i, j) < std::pair(best_i, best_j))) {
        best = value;
        best_i = i;
        best_j = j;
      }
    };
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (auto it = between[i].upper_bound(i); it != between[i].end(); ++it) {
        consider(i, it->first, gain(i, it->first, it->second));
      }
    }
    // Unconnected pairs score -D_i D_j <= 0; they only matter when no
    // connected merge is strictly positive.
    if (best <= 0) {
      for (std::uint32_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        for (std::uint32_t j = i + 1; j < n; ++j) {
          if (alive[j] && !between[i].contains(j)) consider(i, j, gain(i, j, 0));
        }
      }
    }

    if (observer) {
      MergeStep step;
      step.slot_of_vertex.resize(n);
      for (std::uint32_t s = 0; s < n; ++s) {
        if (!alive[s]) continue;
        for (auto v : members[s]) step.slot_of_vertex[v] = s;
      }
      step.first = best_i;
      step.second = best_j;
      step.gain_numerator = best;
      observer(step);
    }

    // Absorb best_j into best_i.
    for (const auto& [x, w] : between[best_j]) {
      if (x == best_i) continue;
      between[best_i][x] += w;
      between[x][best_i] += w;
      between[x].erase(best_j);
    }
    between[best_i].erase(best_j);
    between[best_j].clear();
    degree[best_i] += degree[best_j];
    members[best_i].insert(members[best_i].end(), members[best_j].begin(), members[best_j].end());
    members[best_j].clear();
    alive[best_j] = false;
  }

  std::vector<AxisId> membership(n, 0);
  AxisId next = 0;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (!alive[s]) continue;
    for (auto v : members[s]) membership[v] = next;
    ++next;
  }
  return Partition(std::move(membership));
}

}  // namespace hive
