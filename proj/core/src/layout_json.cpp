#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "hive/render.hpp"
#include "json.hpp"

namespace hive {
namespace {

using nlohmann::json;

void write_canonical(std::string& out, const json& value) {
  switch (value.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {  // std::map keeps keys sorted
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        write_canonical(out, item);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) out += ',';
        write_canonical(out, value[i]);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.6f", value.get<double>());
      std::string s = buf;
      if (s == "-0.000000") s = "0.000000";
      out += s;
      break;
    }
    default:
      out += value.dump();
  }
}

std::string canonical_text(const json& value) {
  std::string out;
  write_canonical(out, value);
  out += '\n';
  return out;
}

json point(const Point& p) { return json::array({p.x, p.y}); }

json path_json(const std::vector<Point>& path) {
  json arr = json::array();
  for (const auto& p : path) arr.push_back(point(p));
  return arr;
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw HiveError(std::string("layout JSON: missing \"") + key + "\"");
  }
  return obj.at(key);
}

std::uint64_t require_uint(const json& obj, const char* key) {
  const auto& v = require(obj, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw HiveError(std::string("layout JSON: \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

std::string canonicalize_json(const std::string& text) {
  try {
    return canonical_text(json::parse(text));
  } catch (const json::exception& e) {
    throw HiveError(std::string("JSON: ") + e.what());
  }
}

std::string export_layout_json(const AugmentedLayout& layout, const Graph& graph,
                               const GeometryDoc& geometry, const LayoutMeta& meta) {
  const auto& base = layout.base();
  json doc;

  json expanded = json::array();
  for (const auto& ax : geometry.axes) {
    if (ax.expanded) expanded.push_back(ax.axis);
  }
  doc["meta"] = {{"k", base.k},
                 {"g", base.gaps},
                 {"seed", meta.seed},
                 {"crossings", {{"inter", meta.crossings.inter_axis}, {"intra", meta.crossings.intra_axis}}},
                 {"expanded", expanded}};

  json axes = json::array();
  for (const auto& ax : geometry.axes) {
    axes.push_back({{"id", ax.axis}, {"order", ax.position}, {"angle", ax.angle}, {"color", ax.color.hex()}});
  }
  doc["axes"] = std::move(axes);

  // Segment / gap list of every node.
  std::vector<std::size_t> slot(layout.node_count(), 0);
  for (AxisId a = 0; a < base.k; ++a) {
    const auto& arr = layout.arrangement(a);
    for (std::size_t s = 0; s < arr.segments.size(); ++s) {
      for (auto node : arr.segments[s]) slot[node] = s;
    }
    for (std::size_t g = 0; g < arr.gaps.size(); ++g) {
      for (auto node : arr.gaps[g]) slot[node] = g;
    }
  }

  json vertices = json::array();
  for (const auto& v : geometry.vertices) {
    const auto& mark = v.marks.front();
    vertices.push_back({{"id", v.vertex},
                        {"label", graph.label(v.vertex)},
                        {"axis", v.axis},
                        {"group", v.axis},
                        {"index", v.index},
                        {"segment", slot[v.vertex]},
                        {"r", v.radius},
                        {"x", mark.x},
                        {"y", mark.y},
                        {"degree", v.degree},
                        {"interAxisDegree", v.inter_axis_degree}});
  }
  doc["vertices"] = std::move(vertices);

  json dummies = json::array();
  for (const auto& d : geometry.dummies) {
    dummies.push_back({{"id", d.id},
                       {"axis", d.axis},
                       {"index", d.index},
                       {"gap", slot[d.id]},
                       {"edge", d.edge},
                       {"x", d.position.x},
                       {"y", d.position.y}});
  }
  doc["dummies"] = std::move(dummies);

  json edges = json::array();
  for (const auto& e : geometry.edges) {
    edges.push_back({{"source", e.source},
                     {"target", e.target},
                     {"class", edge_kind_name(e.kind)},
                     {"color", e.color.hex()},
                     {"path", path_json(e.path)}});
  }
  doc["edges"] = std::move(edges);
  return canonical_text(doc);
}

LoadedLayout load_layout_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw HiveError(std::string("layout JSON: ") + e.what());
  }
  try {
    const auto& meta = require(doc, "meta");
    const auto k = require_uint(meta, "k");
    const auto g = require_uint(meta, "g");
    const auto& vertices = require(doc, "vertices");
    const auto& axes = require(doc, "axes");
    const auto& dummies = require(doc, "dummies");
    const auto& edges = require(doc, "edges");
    if (!vertices.is_array() || !axes.is_array() || !dummies.is_array() || !edges.is_array()) {
      throw HiveError("layout JSON: vertices, axes, dummies and edges must be arrays");
    }
    if (axes.size() != k) throw HiveError("layout JSON: axes do not match meta.k");
    if (g < 1) throw HiveError("layout JSON: g must be at least 1");

    const std::size_t n = vertices.size();
    std::vector<std::string> labels(n);
    HiveLayout base;
    base.k = k;
    base.gaps = g;
    base.alpha.assign(n, 0);
    base.pi.assign(n, 0);
    base.phi.assign(k, 0);
    std::vector<bool> seen(n, false);
    for (const auto& ax : axes) {
      const auto id = require_uint(ax, "id");
      if (id >= k) throw HiveError("layout JSON: axis id out of range");
      base.phi[id] = require_uint(ax, "order");
    }

    std::vector<AxisArrangement> arrangement(k, AxisArrangement::empty(g));
    struct Placed {
      std::size_t index;
      NodeId node;
    };
    std::vector<std::vector<std::vector<Placed>>> seg(k), gap(k);
    for (AxisId a = 0; a < k; ++a) {
      seg[a].resize(arrangement[a].segments.size());
      gap[a].resize(arrangement[a].gaps.size());
    }
    for (const auto& v : vertices) {
      const auto id = require_uint(v, "id");
      if (id >= n || seen[id]) throw HiveError("layout JSON: vertex ids must be 0..n-1, each once");
      seen[id] = true;
      const auto& label = require(v, "label");
      if (!label.is_string()) throw HiveError("layout JSON: label must be a string");
      labels[id] = label.get<std::string>();
      const auto axis = require_uint(v, "axis");
      const auto segment = require_uint(v, "segment");
      if (axis >= k || segment >= seg[axis].size()) {
        throw HiveError("layout JSON: vertex " + std::to_string(id) + " has an invalid axis or segment");
      }
      base.alpha[id] = static_cast<AxisId>(axis);
      seg[axis][segment].push_back({require_uint(v, "index"), static_cast<NodeId>(id)});
    }

    std::vector<Edge> edge_list;
    edge_list.reserve(edges.size());
    for (const auto& e : edges) {
      const auto u = require_uint(e, "source");
      const auto v = require_uint(e, "target");
      if (u >= n || v >= n) throw HiveError("layout JSON: edge endpoint out of range");
      edge_list.push_back(Edge{static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v))});
    }
    Graph graph(std::move(labels), std::move(edge_list));

    for (const auto& d : dummies) {
      const auto id = require_uint(d, "id");
      const auto axis = require_uint(d, "axis");
      const auto slot = require_uint(d, "gap");
      if (axis >= k || slot >= gap[axis].size()) {
        throw HiveError("layout JSON: dummy " + std::to_string(id) + " has an invalid axis or gap");
      }
      gap[axis][slot].push_back({require_uint(d, "index"), static_cast<NodeId>(id)});
    }
    auto sorted_nodes = [](std::vector<Placed>& placed) {
      std::sort(placed.begin(), placed.end(),
                [](const Placed& a, const Placed& b) { return a.index < b.index; });
      std::vector<NodeId> out;
      for (const auto& p : placed) out.push_back(p.node);
      return out;
    };
    for (AxisId a = 0; a < k; ++a) {
      for (std::size_t s = 0; s < seg[a].size(); ++s) arrangement[a].segments[s] = sorted_nodes(seg[a][s]);
      for (std::size_t s = 0; s < gap[a].size(); ++s) arrangement[a].gaps[s] = sorted_nodes(gap[a][s]);
    }

    LoadedLayout out{graph, AugmentedLayout(graph, base, std::move(arrangement)), {}};
    if (out.layout.dummies().size() != dummies.size()) {
      throw HiveError("layout JSON: dummies do not match the routed long edges");
    }
    for (const auto& d : dummies) {
      const auto id = static_cast<NodeId>(require_uint(d, "id"));
      if (id >= out.layout.node_count() || !out.layout.is_dummy(id) ||
          out.layout.dummy(id).axis != require_uint(d, "axis") ||
          out.layout.dummy(id).edge != require_uint(d, "edge")) {
        throw HiveError("layout JSON: dummy " + std::to_string(id) + " does not match its long edge");
      }
    }
    out.meta.seed = require_uint(meta, "seed");
    const auto& crossings = require(meta, "crossings");
    out.meta.crossings.inter_axis = require_uint(crossings, "inter");
    out.meta.crossings.intra_axis = require_uint(crossings, "intra");
    return out;
  } catch (const json::exception& e) {
    throw HiveError(std::string("layout JSON: ") + e.what());
  }
}

}  // namespace hive
