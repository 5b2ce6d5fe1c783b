#include "hive/layout.hpp"

#include <algorithm>
#include <string>

namespace hive {

std::vector<VertexId> HiveLayout::axis_sequence(AxisId axis) const {
  std::vector<VertexId> seq;
  for (VertexId v = 0; v < alpha.size(); ++v) {
    if (alpha[v] == axis) seq.push_back(v);
  }
  std::sort(seq.begin(), seq.end(), [&](VertexId a, VertexId b) {
    return pi[a] != pi[b] ? pi[a] < pi[b] : a < b;
  });
  return seq;
}

AxisId HiveLayout::axis_at(std::size_t position) const {
  auto it = std::find(phi.begin(), phi.end(), position);
  if (it == phi.end()) throw HiveError("no axis at position " + std::to_string(position));
  return static_cast<AxisId>(it - phi.begin());
}

HiveLayout make_layout(const Partition& partition, std::vector<std::size_t> phi,
                       std::size_t gaps) {
  HiveLayout layout;
  layout.k = partition.group_count();
  if (phi.size() != layout.k) throw HiveError("axis order size does not match the partition");
  layout.alpha = partition.membership();
  layout.phi = std::move(phi);
  layout.gaps = gaps;
  layout.pi.assign(layout.alpha.size(), 0);
  for (const auto& group : partition.groups()) {
    for (std::size_t i = 0; i < group.size(); ++i) layout.pi[group[i]] = i;
  }
  return layout;
}

std::size_t span(const HiveLayout& layout, AxisId i, AxisId j) {
  if (i >= layout.k || j >= layout.k || layout.phi.size() != layout.k) {
    throw HiveError("span: unknown axis " + std::to_string(std::max(i, j)));
  }
  return cyclic_span(layout.phi[i], layout.phi[j], layout.k);
}

EdgeClass classify_edge(const HiveLayout& layout, const Edge& edge) {
  if (edge.u >= layout.alpha.size() || edge.v >= layout.alpha.size()) {
    throw HiveError("classify_edge: endpoint not in layout");
  }
  const auto s = span(layout, layout.alpha[edge.u], layout.alpha[edge.v]);
  if (s == 0) return IntraAxisEdge{};
  if (s == 1) return ProperEdge{};
  return LongEdge{s};
}

const char* edge_class_name(const EdgeClass& cls) {
  if (std::holds_alternative<ProperEdge>(cls)) return "proper";
  if (std::holds_alternative<LongEdge>(cls)) return "long";
  return "intra";
}

EdgeClassCounts count_edge_classes(const HiveLayout& layout, const Graph& graph) {
  EdgeClassCounts counts;
  for (const auto& e : graph.edges()) {
    const auto cls = classify_edge(layout, e);
    if (std::holds_alternative<IntraAxisEdge>(cls)) {
      ++counts.intra;
    } else if (std::holds_alternative<ProperEdge>(cls)) {
      ++counts.proper;
    } else {
      ++counts.long_edges;
      counts.long_span_total += std::get<LongEdge>(cls).span;
    }
  }
  return counts;
}

}  // namespace hive
