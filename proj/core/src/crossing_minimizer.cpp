#include "hive/crossing_minimizer.hpp"

#include <algorithm>
#include <numeric>

#include "random.hpp"

namespace hive {
namespace {

// Crossings between the links of `first` and `second` when `first` is drawn
// before `second` on their common axis.
std::uint64_t pair_crossings(NodeId first, NodeId second, const AugmentedLayout& layout) {
  std::uint64_t count = 0;
  for (auto a : layout.neighbors(first)) {
    const auto axis = layout.axis_of(a);
    const auto pa = layout.position(a);
    for (auto b : layout.neighbors(second)) {
      if (layout.axis_of(b) == axis && pa > layout.position(b)) ++count;
    }
  }
  return count;
}

struct Keyed {
  NodeId node;
  double key;
  std::size_t previous;
};

bool keyed_less(const Keyed& a, const Keyed& b) {
  if (a.key != b.key) return a.key < b.key;
  if (a.previous != b.previous) return a.previous < b.previous;
  return a.node < b.node;
}

std::vector<NodeId> nodes_of(const std::vector<Keyed>& keyed) {
  std::vector<NodeId> out;
  out.reserve(keyed.size());
  for (const auto& k : keyed) out.push_back(k.node);
  return out;
}

// Axes in sweep order.
std::vector<AxisId> sweep_order(const HiveLayout& base, SweepDirection direction) {
  std::vector<AxisId> axes(base.k);
  for (AxisId a = 0; a < base.k; ++a) axes[base.phi[a]] = a;
  if (direction == SweepDirection::kCounterClockwise) std::reverse(axes.begin(), axes.end());
  return axes;
}

}  // namespace

double barycenter_position(NodeId node, const AugmentedLayout& layout) {
  const auto neighbors = layout.neighbors(node);
  if (neighbors.empty()) return layout.normalized_position(node);
  double sum = 0.0;
  for (auto v : neighbors) sum += layout.normalized_position(v);
  return sum / static_cast<double>(neighbors.size());
}

AxisArrangement sort_axis_with_gaps(AxisId axis, std::span<const NodeId> sorted,
                                    const AugmentedLayout& layout) {
  (void)axis;
  const std::size_t g = std::max<std::size_t>(layout.gaps(), 1);
  auto out = AxisArrangement::empty(g);

  if (g == 1) {
    for (auto node : sorted) {
      (layout.is_dummy(node) ? out.gaps[0] : out.segments[0]).push_back(node);
    }
    return out;
  }

  const std::size_t segments = g - 1;
  const auto reals = static_cast<std::size_t>(std::count_if(
      sorted.begin(), sorted.end(), [&](NodeId v) { return !layout.is_dummy(v); }));
  // Segment j is full once it holds |V_i| / (g - 1) real vertices.
  auto full = [&](std::size_t size) { return size * segments >= reals; };
  const std::size_t quota = (reals + segments - 1) / segments;

  std::size_t j = 0;
  bool went_right = false;  // a dummy of this segment already took gap j + 1
  for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
    const NodeId node = sorted[idx];
    if (!layout.is_dummy(node)) {
      out.segments[j].push_back(node);
      if (j + 1 < segments && full(out.segments[j].size())) {
        ++j;
        went_right = false;
      }
      continue;
    }
    if (went_right) {
      out.gaps[j + 1].push_back(node);
      continue;
    }
    // Compare drawing the dummy before or after every real vertex of
    // segment j: those already placed and those still to come.
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    for (auto x : out.segments[j]) {
      left += pair_crossings(node, x, layout);
      right += pair_crossings(x, node, layout);
    }
    std::size_t upcoming = j + 1 < segments ? quota - std::min(quota, out.segments[j].size())
                                            : sorted.size();
    for (std::size_t next = idx + 1; next < sorted.size() && upcoming > 0; ++next) {
      const NodeId x = sorted[next];
      if (layout.is_dummy(x)) continue;
      left += pair_crossings(node, x, layout);
      right += pair_crossings(x, node, layout);
      --upcoming;
    }
    if (right < left) {
      out.gaps[j + 1].push_back(node);
      went_right = true;
    } else {
      out.gaps[j].push_back(node);
    }
  }
  return out;
}

AugmentedLayout phase1_minimize(const AugmentedLayout& layout, std::size_t max_iterations,
                                PhaseStats* stats) {
  AugmentedLayout current = layout;
  AugmentedLayout best = layout;
  std::uint64_t best_crossings = count_inter_axis_crossings(layout);
  PhaseStats local;
  local.initial_crossings = best_crossings;

  auto direction = SweepDirection::kClockwise;
  std::vector<Keyed> keyed;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    bool changed = false;
    for (auto axis : sweep_order(current.base(), direction)) {
      const auto items = current.arrangement(axis).drawing_order();
      if (items.empty()) continue;
      keyed.clear();
      for (std::size_t i = 0; i < items.size(); ++i) {
        keyed.push_back({items[i], barycenter_position(items[i], current), i});
      }
      std::sort(keyed.begin(), keyed.end(), keyed_less);
      const auto sorted = nodes_of(keyed);
      auto arrangement = sort_axis_with_gaps(axis, sorted, current);
      if (arrangement != current.arrangement(axis)) {
        changed = true;
        current.set_arrangement(axis, std::move(arrangement));
      }
    }
    ++local.iterations;
    const auto crossings = count_inter_axis_crossings(current);
    if (crossings < best_crossings) {
      best_crossings = crossings;
      best = current;
    }
    if (!changed) break;
    direction = direction == SweepDirection::kClockwise ? SweepDirection::kCounterClockwise
                                                        : SweepDirection::kClockwise;
  }
  local.final_crossings = best_crossings;
  if (stats) *stats = local;
  return best;
}

AugmentedLayout phase2_intra(const AugmentedLayout& layout, const Graph& graph,
                             std::size_t max_iterations, PhaseStats* stats) {
  AugmentedLayout current = layout;
  const auto& base = layout.base();
  PhaseStats local;

  std::vector<std::vector<VertexId>> same_axis(graph.vertex_count());
  for (auto ei : layout.intra_edges()) {
    const auto& e = graph.edge(ei);
    same_axis[e.u].push_back(e.v);
    same_axis[e.v].push_back(e.u);
  }
  auto frozen = [&](NodeId node) {
    return current.is_dummy(node) || !current.neighbors(node).empty();
  };

  std::vector<Keyed> fixed;
  std::vector<Keyed> free;
  for (AxisId axis = 0; axis < base.k; ++axis) {
    auto best = current.arrangement(axis);
    auto best_crossings = count_intra_axis_crossings_on_axis(current.base(), graph, axis);
    local.initial_crossings += best_crossings;

    for (std::size_t it = 0; it < max_iterations; ++it) {
      const auto items = current.arrangement(axis).drawing_order();
      fixed.clear();
      free.clear();
      for (std::size_t i = 0; i < items.size(); ++i) {
        const NodeId node = items[i];
        if (frozen(node)) {
          fixed.push_back({node, current.normalized_position(node), i});
          continue;
        }
        // Both axis copies share one order, so the barycenter runs over
        // same-axis neighbors directly.
        const auto& nbrs = same_axis[node];
        double key = current.normalized_position(node);
        if (!nbrs.empty()) {
          double sum = 0.0;
          for (auto v : nbrs) sum += current.normalized_position(v);
          key = sum / static_cast<double>(nbrs.size());
        }
        free.push_back({node, key, i});
      }
      if (free.empty()) break;
      std::sort(free.begin(), free.end(), keyed_less);
      std::vector<Keyed> merged;
      merged.reserve(items.size());
      std::merge(fixed.begin(), fixed.end(), free.begin(), free.end(), std::back_inserter(merged),
                 keyed_less);
      const auto sorted = nodes_of(merged);
      auto arrangement = sort_axis_with_gaps(axis, sorted, current);
      ++local.iterations;
      if (arrangement == current.arrangement(axis)) break;
      // Re-assigning dummies to gaps may move one past a frozen vertex once
      // the segment boundaries shift; such candidates are dropped.
      const auto candidate = arrangement.drawing_order();
      std::vector<NodeId> frozen_after;
      for (auto node : candidate) {
        if (frozen(node)) frozen_after.push_back(node);
      }
      if (!std::equal(frozen_after.begin(), frozen_after.end(), fixed.begin(), fixed.end(),
                      [](NodeId a, const Keyed& b) { return a == b.node; })) {
        break;
      }
      current.set_arrangement(axis, std::move(arrangement));
      const auto crossings = count_intra_axis_crossings_on_axis(current.base(), graph, axis);
      if (crossings < best_crossings) {
        best_crossings = crossings;
        best = current.arrangement(axis);
      }
    }
    current.set_arrangement(axis, std::move(best));
    local.final_crossings += best_crossings;
  }
  if (stats) *stats = local;
  return current;
}

MinimizeResult minimize_crossings(const HiveLayout& layout, const Graph& graph,
                                  const MinimizeOptions& options) {
  if (options.gaps < 1) throw HiveError("minimize_crossings: g must be at least 1");
  HiveLayout base = layout;
  base.gaps = options.gaps;
  base.pi.assign(base.alpha.size(), 0);

  detail::Rng rng(options.seed);
  std::vector<std::vector<VertexId>> per_axis(base.k);
  for (VertexId v = 0; v < base.alpha.size(); ++v) per_axis.at(base.alpha[v]).push_back(v);
  for (auto& vertices : per_axis) {
    rng.shuffle(std::span<VertexId>(vertices));
    for (std::size_t i = 0; i < vertices.size(); ++i) base.pi[vertices[i]] = i;
  }

  MinimizeResult result;
  const auto subdivided = subdivide_long_edges(graph, base);
  const auto after_phase1 = phase1_minimize(subdivided, options.phase1_iterations, &result.phase1);
  result.layout = phase2_intra(after_phase1, graph, options.phase2_iterations, &result.phase2);
  result.report = count_crossings(result.layout, graph);
  return result;
}

}  // namespace hive
