#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hive/graph.hpp"

namespace hive {

/// Disjoint, nonempty vertex groups covering V. Group i becomes axis i.
class Partition {
 public:
  Partition() = default;

  /// `membership[v]` is the group of vertex v. Group indices must be dense
  /// (every index in [0, max] used); throws HiveError otherwise.
  explicit Partition(std::vector<AxisId> membership);

  std::size_t group_count() const { return groups_.size(); }
  std::size_t vertex_count() const { return membership_.size(); }
  AxisId group_of(VertexId v) const { return membership_.at(v); }
  const std::vector<AxisId>& membership() const { return membership_; }
  const std::vector<VertexId>& group(AxisId i) const { return groups_.at(i); }
  const std::vector<std::vector<VertexId>>& groups() const { return groups_; }

  /// Renumbers groups by their smallest member, keeping the grouping.
  Partition canonical() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.membership_ == b.membership_;
  }

 private:
  std::vector<AxisId> membership_;
  std::vector<std::vector<VertexId>> groups_;
};

/// Newman-Girvan modularity Q = sum_c (e_cc - a_c^2). Zero for edgeless graphs.
double modularity(const Graph& graph, const Partition& partition);

/// One agglomeration step of `partition_with_k`: communities are identified by
/// slot ids (the smallest slot id survives a merge).
struct MergeStep {
  std::vector<std::uint32_t> slot_of_vertex;  // state before the merge
  std::uint32_t first = 0;                    // surviving slot
  std::uint32_t second = 0;                   // absorbed slot, first < second
  std::int64_t gain_numerator = 0;            // dQ * 2 m^2
};

using MergeObserver = std::function<void(const MergeStep&)>;

/// Clauset-Newman-Moore greedy agglomeration stopped at exactly k groups.
/// Merges the best-gain pair each step even when the gain is negative; ties
/// go to the lexicographically smallest slot pair. Requires 1 <= k <= |V|.
Partition partition_with_k(const Graph& graph, std::size_t k,
                           const MergeObserver& observer = {});

/// Louvain community detection with seeded vertex visiting order and
/// resolution 1. The number of groups is whatever the method finds.
Partition partition_auto(const Graph& graph, std::uint64_t seed);

}  // namespace hive
