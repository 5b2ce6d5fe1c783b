#include "hive/crossings.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace hive {
namespace {

class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}
  void add(std::size_t i) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }
  // Number of inserted values < i.
  std::uint64_t below(std::size_t i) const {
    std::uint64_t s = 0;
    for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<std::uint64_t> tree_;
};

// Pairs (i, j) with x_i < x_j and y_i > y_j.
std::uint64_t count_inversions(std::vector<std::pair<std::size_t, std::size_t>> points) {
  if (points.size() < 2) return 0;
  std::sort(points.begin(), points.end());
  std::size_t max_y = 0;
  for (const auto& p : points) max_y = std::max(max_y, p.second);
  Fenwick seen(max_y + 1);
  std::uint64_t count = 0;
  std::uint64_t inserted = 0;
  for (const auto& [x, y] : points) {
    count += inserted - seen.below(y + 1);
    seen.add(y);
    ++inserted;
  }
  return count;
}

std::uint64_t count_nested(std::vector<std::pair<std::size_t, std::size_t>> intervals) {
  // Nested (lo_i < lo_j, hi_j < hi_i) is an inversion on (lo, hi).
  return count_inversions(std::move(intervals));
}

}  // namespace

std::uint64_t count_inter_axis_crossings(const AugmentedLayout& layout) {
  std::map<std::pair<AxisId, AxisId>, std::vector<std::pair<std::size_t, std::size_t>>> by_pair;
  for (const auto& link : layout.links()) {
    const AxisId a = layout.axis_of(link.a);
    const AxisId b = layout.axis_of(link.b);
    if (a < b) {
      by_pair[{a, b}].emplace_back(layout.position(link.a), layout.position(link.b));
    } else {
      by_pair[{b, a}].emplace_back(layout.position(link.b), layout.position(link.a));
    }
  }
  std::uint64_t total = 0;
  for (auto& [pair, points] : by_pair) total += count_inversions(std::move(points));
  return total;
}

std::uint64_t count_inter_axis_crossings_between(const AugmentedLayout& layout, AxisId a,
                                                 AxisId b) {
  std::vector<std::pair<std::size_t, std::size_t>> points;
  for (const auto& link : layout.links()) {
    const AxisId la = layout.axis_of(link.a);
    const AxisId lb = layout.axis_of(link.b);
    if (la == a && lb == b) {
      points.emplace_back(layout.position(link.a), layout.position(link.b));
    } else if (la == b && lb == a) {
      points.emplace_back(layout.position(link.b), layout.position(link.a));
    }
  }
  return count_inversions(std::move(points));
}

std::uint64_t count_intra_axis_crossings_on_axis(const HiveLayout& layout, const Graph& graph,
                                                 AxisId axis) {
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
  for (const auto& e : graph.edges()) {
    if (layout.alpha[e.u] != axis || layout.alpha[e.v] != axis) continue;
    intervals.emplace_back(std::minmax(layout.pi[e.u], layout.pi[e.v]));
  }
  return count_nested(std::move(intervals));
}

std::uint64_t count_intra_axis_crossings(const HiveLayout& layout, const Graph& graph) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> per_axis(layout.k);
  for (const auto& e : graph.edges()) {
    if (layout.alpha[e.u] != layout.alpha[e.v]) continue;
    per_axis[layout.alpha[e.u]].emplace_back(std::minmax(layout.pi[e.u], layout.pi[e.v]));
  }
  std::uint64_t total = 0;
  for (auto& intervals : per_axis) total += count_nested(std::move(intervals));
  return total;
}

CrossingReport count_crossings(const AugmentedLayout& layout, const Graph& graph) {
  return {count_inter_axis_crossings(layout), count_intra_axis_crossings(layout.base(), graph)};
}

}  // namespace hive
