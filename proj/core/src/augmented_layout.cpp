#include "hive/augmented_layout.hpp"

#include <algorithm>
#include <string>

namespace hive {

AxisArrangement AxisArrangement::empty(std::size_t gap_count) {
  AxisArrangement a;
  a.gaps.resize(std::max<std::size_t>(gap_count, 1));
  a.segments.resize(gap_count > 1 ? gap_count - 1 : 1);
  return a;
}

std::vector<NodeId> AxisArrangement::drawing_order() const {
  std::vector<NodeId> order;
  order.reserve(item_count());
  auto append = [&](const std::vector<NodeId>& list) {
    order.insert(order.end(), list.begin(), list.end());
  };
  if (gaps.size() <= 1) {
    for (const auto& s : segments) append(s);
    for (const auto& g : gaps) append(g);
    return order;
  }
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    append(gaps[i]);
    if (i < segments.size()) append(segments[i]);
  }
  for (std::size_t i = gaps.size(); i < segments.size(); ++i) append(segments[i]);
  return order;
}

std::size_t AxisArrangement::item_count() const {
  std::size_t count = 0;
  for (const auto& g : gaps) count += g.size();
  for (const auto& s : segments) count += s.size();
  return count;
}

AugmentedLayout::AugmentedLayout(const Graph& graph, HiveLayout base,
                                 std::vector<AxisArrangement> arrangement)
    : base_(std::move(base)), topology_(build_topology(graph, base_)) {
  if (arrangement.size() != base_.k) {
    throw HiveError("arrangement has " + std::to_string(arrangement.size()) +
                    " axes, layout has " + std::to_string(base_.k));
  }
  arrangement_ = std::move(arrangement);
  base_.pi.resize(base_.alpha.size(), 0);
  position_.assign(node_count(), 0);
  axis_size_.assign(base_.k, 0);
  for (AxisId a = 0; a < base_.k; ++a) refresh_axis(a);
}

std::shared_ptr<const AugmentedLayout::Topology> AugmentedLayout::build_topology(
    const Graph& graph, const HiveLayout& base) {
  const std::size_t n = base.alpha.size();
  const std::size_t k = base.k;
  if (graph.vertex_count() != n) {
    throw HiveError("layout covers " + std::to_string(n) + " vertices, graph has " +
                    std::to_string(graph.vertex_count()));
  }
  if (base.phi.size() != k) throw HiveError("phi must list one position per axis");
  std::vector<AxisId> axis_at(k, 0);
  std::vector<bool> seen(k, false);
  for (AxisId a = 0; a < k; ++a) {
    if (base.phi[a] >= k || seen[base.phi[a]]) throw HiveError("phi is not a bijection");
    seen[base.phi[a]] = true;
    axis_at[base.phi[a]] = a;
  }
  for (auto a : base.alpha) {
    if (a >= k) throw HiveError("alpha maps a vertex to an unknown axis");
  }

  auto topo = std::make_shared<Topology>();
  auto next_dummy = static_cast<NodeId>(n);
  for (std::size_t ei = 0; ei < graph.edge_count(); ++ei) {
    const auto& e = graph.edge(ei);
    const std::size_t pu = base.phi[base.alpha[e.u]];
    const std::size_t pv = base.phi[base.alpha[e.v]];
    const std::size_t s = cyclic_span(pu, pv, k);
    if (s == 0) {
      topo->intra_edges.push_back(ei);
      continue;
    }
    // Walk clockwise (increasing position) from the start endpoint.
    const std::size_t forward = (pv + k - pu) % k;
    const bool from_u = forward < k - forward || (forward == k - forward && pu < pv);
    const VertexId start = from_u ? e.u : e.v;
    const VertexId end = from_u ? e.v : e.u;
    const std::size_t p0 = from_u ? pu : pv;
    if (s == 1) {
      topo->links.push_back(Link{start, end, ei});
      continue;
    }
    LongEdgeRoute route{ei, {start}};
    for (std::size_t step = 1; step < s; ++step) {
      const NodeId d = next_dummy++;
      topo->dummies.push_back(DummyVertex{d, axis_at[(p0 + step) % k], ei, step});
      route.chain.push_back(d);
    }
    route.chain.push_back(end);
    for (std::size_t i = 0; i + 1 < route.chain.size(); ++i) {
      topo->links.push_back(Link{route.chain[i], route.chain[i + 1], ei});
    }
    topo->routes.push_back(std::move(route));
  }

  const std::size_t nodes = next_dummy;
  std::vector<std::size_t> degree(nodes, 0);
  for (const auto& l : topo->links) {
    ++degree[l.a];
    ++degree[l.b];
  }
  topo->offsets.assign(nodes + 1, 0);
  for (std::size_t i = 0; i < nodes; ++i) topo->offsets[i + 1] = topo->offsets[i] + degree[i];
  topo->adjacency.resize(topo->offsets[nodes]);
  std::vector<std::size_t> fill(topo->offsets.begin(), topo->offsets.end() - 1);
  for (const auto& l : topo->links) {
    topo->adjacency[fill[l.a]++] = l.b;
    topo->adjacency[fill[l.b]++] = l.a;
  }
  return topo;
}

AxisId AugmentedLayout::axis_of(NodeId node) const {
  return is_dummy(node) ? dummy(node).axis : base_.alpha.at(node);
}

double AugmentedLayout::normalized_position(NodeId node) const {
  const auto size = axis_size(axis_of(node));
  return size == 0 ? 0.0 : static_cast<double>(position(node)) / static_cast<double>(size);
}

void AugmentedLayout::set_arrangement(AxisId axis, AxisArrangement arrangement) {
  arrangement_.at(axis) = std::move(arrangement);
  refresh_axis(axis);
}

void AugmentedLayout::refresh_axis(AxisId axis) {
  const auto order = arrangement_[axis].drawing_order();
  axis_size_[axis] = order.size();
  std::size_t real_index = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const NodeId node = order[i];
    if (node >= position_.size()) {
      throw HiveError("arrangement references unknown node " + std::to_string(node));
    }
    position_[node] = i;
    if (!is_dummy(node)) base_.pi[node] = real_index++;
  }
}

AugmentedLayout subdivide_long_edges(const Graph& graph, const HiveLayout& layout) {
  const std::size_t g = std::max<std::size_t>(layout.gaps, 1);
  std::vector<AxisArrangement> arrangement(layout.k, AxisArrangement::empty(g));
  AugmentedLayout out(graph, layout, arrangement);

  for (AxisId a = 0; a < layout.k; ++a) {
    auto reals = layout.axis_sequence(a);
    auto axis = AxisArrangement::empty(g);
    std::size_t j = 0;
    for (auto v : reals) {
      axis.segments[j].push_back(v);
      if (g > 1 && j + 2 < g && axis.segments[j].size() * (g - 1) >= reals.size()) ++j;
    }
    arrangement[a] = std::move(axis);
  }
  for (const auto& d : out.dummies()) arrangement[d.axis].gaps.back().push_back(d.id);
  for (AxisId a = 0; a < layout.k; ++a) out.set_arrangement(a, std::move(arrangement[a]));
  return out;
}

}  // namespace hive
