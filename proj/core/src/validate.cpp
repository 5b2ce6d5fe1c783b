#include "hive/validate.hpp"

#include <algorithm>
#include <string>

namespace hive {
namespace {

void add(std::vector<Violation>& out, std::string code, std::string message) {
  out.push_back({std::move(code), std::move(message)});
}

}  // namespace

std::vector<Violation> validate_layout(const HiveLayout& layout) {
  std::vector<Violation> out;
  const std::size_t k = layout.k;
  if (k == 0) add(out, "axis count", "layout has no axes");
  if (layout.gaps < 1) add(out, "gap count", "g must be at least 1");

  bool phi_ok = layout.phi.size() == k;
  std::vector<bool> used(k, false);
  if (phi_ok) {
    for (auto p : layout.phi) {
      if (p >= k || used[p]) {
        phi_ok = false;
        break;
      }
      used[p] = true;
    }
  }
  if (!phi_ok) add(out, "phi not bijective", "phi is not a bijection onto {0..k-1}");

  std::vector<std::size_t> group_size(k, 0);
  bool alpha_ok = true;
  for (VertexId v = 0; v < layout.alpha.size(); ++v) {
    if (layout.alpha[v] >= k) {
      alpha_ok = false;
      add(out, "alpha not total", "vertex " + std::to_string(v) + " maps to unknown axis " +
                                      std::to_string(layout.alpha[v]));
    } else {
      ++group_size[layout.alpha[v]];
    }
  }
  for (AxisId a = 0; a < k; ++a) {
    if (group_size[a] == 0) add(out, "alpha not surjective", "axis " + std::to_string(a) + " is empty");
  }

  if (layout.pi.size() != layout.alpha.size()) {
    add(out, "pi not bijective", "pi does not cover every vertex");
  } else if (alpha_ok) {
    std::vector<std::vector<bool>> taken(k);
    for (AxisId a = 0; a < k; ++a) taken[a].assign(group_size[a], false);
    std::vector<bool> reported(k, false);
    for (VertexId v = 0; v < layout.alpha.size(); ++v) {
      const auto a = layout.alpha[v];
      const auto p = layout.pi[v];
      if (p >= group_size[a] || taken[a][p]) {
        if (!reported[a]) {
          add(out, "pi not bijective", "positions on axis " + std::to_string(a) +
                                           " are not a permutation");
          reported[a] = true;
        }
        continue;
      }
      taken[a][p] = true;
    }
  }
  return out;
}

std::vector<Violation> validate_layout(const HiveLayout& layout, const Graph& graph) {
  auto out = validate_layout(layout);
  if (layout.alpha.size() != graph.vertex_count()) {
    add(out, "alpha not total", "layout covers " + std::to_string(layout.alpha.size()) +
                                    " of " + std::to_string(graph.vertex_count()) + " vertices");
  }
  return out;
}

std::vector<Violation> validate_layout(const AugmentedLayout& layout, const Graph& graph) {
  auto out = validate_layout(layout.base(), graph);
  if (!out.empty() && (has_violation(out, "phi not bijective") ||
                       has_violation(out, "alpha not total"))) {
    return out;
  }
  const auto& base = layout.base();
  const std::size_t k = base.k;
  const std::size_t g = base.gaps;

  // Dummies: one per intermediate axis of each long edge, along the shorter side.
  std::size_t expected_dummies = 0;
  for (const auto& e : graph.edges()) {
    const auto s = cyclic_span(base.phi[base.alpha[e.u]], base.phi[base.alpha[e.v]], k);
    if (s > 1) expected_dummies += s - 1;
  }
  if (layout.dummies().size() != expected_dummies) {
    add(out, "dummy count", "expected " + std::to_string(expected_dummies) + " dummies, found " +
                                std::to_string(layout.dummies().size()));
  }
  for (const auto& route : layout.routes()) {
    const auto& e = graph.edge(route.edge);
    const auto s = cyclic_span(base.phi[base.alpha[e.u]], base.phi[base.alpha[e.v]], k);
    bool ok = route.chain.size() == s + 1;
    for (std::size_t i = 0; ok && i + 1 < route.chain.size(); ++i) {
      const auto pa = base.phi[layout.axis_of(route.chain[i])];
      const auto pb = base.phi[layout.axis_of(route.chain[i + 1])];
      ok = (pa + 1) % k == pb;
    }
    if (!ok) {
      add(out, "dummy count", "long edge " + std::to_string(route.edge) +
                                  " is not routed through its intermediate axes");
    }
  }

  const auto& arrangement = layout.arrangement();
  if (arrangement.size() != k) {
    add(out, "arrangement shape", "arrangement does not list every axis");
    return out;
  }
  const std::size_t segments = g > 1 ? g - 1 : 1;
  std::vector<std::size_t> occurrences(layout.node_count(), 0);
  for (AxisId a = 0; a < k; ++a) {
    const auto& axis = arrangement[a];
    if (axis.gaps.size() != std::max<std::size_t>(g, 1) || axis.segments.size() != segments) {
      add(out, "arrangement shape", "axis " + std::to_string(a) + " needs " + std::to_string(g) +
                                        " gap lists and " + std::to_string(segments) +
                                        " segment lists");
      continue;
    }
    std::size_t reals = 0;
    for (const auto& list : axis.segments) {
      for (auto node : list) {
        if (node >= occurrences.size()) continue;
        ++occurrences[node];
        if (layout.is_dummy(node)) {
          add(out, "dummy placement", "dummy " + std::to_string(node) + " sits in a segment of axis " +
                                          std::to_string(a));
        } else {
          ++reals;
        }
        if (layout.axis_of(node) != a) {
          add(out, "wrong axis", "node " + std::to_string(node) + " drawn on axis " + std::to_string(a));
        }
      }
    }
    for (const auto& list : axis.gaps) {
      for (auto node : list) {
        if (node >= occurrences.size()) continue;
        ++occurrences[node];
        if (!layout.is_dummy(node)) {
          add(out, "dummy placement", "vertex " + std::to_string(node) + " sits in a gap of axis " +
                                          std::to_string(a));
        }
        if (layout.axis_of(node) != a) {
          add(out, "wrong axis", "node " + std::to_string(node) + " drawn on axis " + std::to_string(a));
        }
      }
    }
    if (g > 1) {
      const std::size_t cap = (reals + g - 2) / (g - 1);
      for (const auto& list : axis.segments) {
        if (list.size() > cap) {
          add(out, "segment overfull", "axis " + std::to_string(a) + " has a segment with " +
                                           std::to_string(list.size()) + " > " +
                                           std::to_string(cap) + " vertices");
          break;
        }
      }
    }
  }
  for (NodeId node = 0; node < occurrences.size(); ++node) {
    if (occurrences[node] != 1) {
      add(out, "node coverage", "node " + std::to_string(node) + " drawn " +
                                    std::to_string(occurrences[node]) + " times");
    }
  }
  return out;
}

bool has_violation(const std::vector<Violation>& violations, const std::string& code) {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

}  // namespace hive
