#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hive/layout.hpp"
#include "hive/render.hpp"

namespace hive {
namespace {

constexpr double kPi = std::numbers::pi;

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

// Unit vector perpendicular to the ray at `angle`, pointing clockwise.
Point clockwise_tangent(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Cubic piece from (from_radius, from_angle) clockwise to (to_radius,
// to_angle) with control points perpendicular to both rays. Control lengths
// are capped so that the controls stay inside the wedge between the rays,
// which keeps the curve off both rays except at its endpoints.
void append_piece(std::vector<Point>& path, double from_radius, double from_angle,
                  double to_radius, double to_angle, double fraction) {
  const Point p = polar_point(from_radius, from_angle);
  const Point q = polar_point(to_radius, to_angle);
  const double wedge = to_angle - from_angle;
  const double chord = std::hypot(q.x - p.x, q.y - p.y);
  double lp = fraction * chord;
  double lq = fraction * chord;
  if (wedge < kPi - 1e-9) {
    const double t = std::tan(wedge / 2.0);
    lp = std::min(lp, from_radius * t);
    lq = std::min(lq, to_radius * t);
  }
  if (path.empty()) path.push_back(p);
  path.push_back(p + lp * clockwise_tangent(from_angle));
  path.push_back(q - lq * clockwise_tangent(to_angle));
  path.push_back(q);
}

}  // namespace

const char* edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kProper:
      return "proper";
    case EdgeKind::kLong:
      return "long";
    case EdgeKind::kIntra:
      return "intra";
  }
  return "unknown";
}

std::string check_style(const RenderStyle& style) {
  if (!(style.canvas_size > 0.0)) return "canvas size must be positive";
  if (!(style.axis_length > 0.0 && style.axis_length <= 0.82)) {
    return "axis length must lie in (0, 0.82] so curves stay inside [-1, 1]^2";
  }
  if (!(style.inner_radius >= 0.0 && style.inner_radius < 1.0)) return "inner radius must lie in [0, 1)";
  if (!(style.intra_share > 0.0 && style.intra_share < 1.0)) return "intra share must lie in (0, 1)";
  if (!(style.label_band_degrees >= 0.0 && style.label_band_degrees <= 90.0)) {
    return "label band must lie in [0, 90] degrees";
  }
  if (!(style.label_rotation_degrees >= 0.0 && style.label_rotation_degrees <= 90.0)) {
    return "label rotation must lie in [0, 90] degrees";
  }
  if (!(style.vertex_radius > 0.0)) return "vertex radius must be positive";
  if (!(style.control_fraction > 0.0 && style.control_fraction < 1.0)) {
    return "control fraction must lie in (0, 1)";
  }
  return {};
}

Point polar_point(double radius, double angle) {
  return {radius * std::sin(angle), -radius * std::cos(angle)};
}

double axis_angle(std::size_t position, std::size_t k) {
  return k == 0 ? 0.0 : 2.0 * kPi * static_cast<double>(position) / static_cast<double>(k);
}

GeometryDoc compute_geometry(const AugmentedLayout& layout, const Graph& graph,
                             const RenderStyle& style) {
  if (auto problem = check_style(style); !problem.empty()) throw HiveError("render style: " + problem);
  const auto& base = layout.base();
  const std::size_t k = base.k;
  const double sector = k == 0 ? 2.0 * kPi : 2.0 * kPi / static_cast<double>(k);
  const double outer = style.axis_length;
  const double inner = style.inner_radius * outer;

  GeometryDoc doc;
  doc.k = k;
  doc.gaps = base.gaps;

  auto slot_radius = [&](std::size_t index, std::size_t count) {
    return inner + (outer - inner) * (static_cast<double>(index) + 0.5) / static_cast<double>(count);
  };

  doc.axes.resize(k);
  for (AxisId a = 0; a < k; ++a) {
    auto& ax = doc.axes[a];
    ax.axis = a;
    ax.position = base.phi[a];
    ax.angle = axis_angle(ax.position, k);
    ax.expanded = style.expanded_axes.contains(a);
    ax.copy_offset = ax.expanded ? style.intra_share * sector / 2.0 : 0.0;
    ax.color = axis_color(ax.angle);

    const auto order = layout.arrangement(a).drawing_order();
    std::vector<std::pair<double, double>> pieces;
    if (order.empty()) {
      pieces.emplace_back(inner, outer);
    } else {
      const double half = 0.4 * (outer - inner) / static_cast<double>(order.size());
      for (std::size_t i = 0; i < order.size();) {
        if (layout.is_dummy(order[i])) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j + 1 < order.size() && !layout.is_dummy(order[j + 1])) ++j;
        pieces.emplace_back(slot_radius(i, order.size()) - half, slot_radius(j, order.size()) + half);
        i = j + 1;
      }
    }
    const std::vector<double> copies =
        ax.expanded ? std::vector<double>{ax.angle + ax.copy_offset, ax.angle - ax.copy_offset}
                    : std::vector<double>{ax.angle};
    for (double angle : copies) {
      for (const auto& [r0, r1] : pieces) {
        ax.lines.emplace_back(polar_point(r0, angle), polar_point(r1, angle));
      }
    }
    if (ax.expanded) {
      const double reach = ax.copy_offset + 0.25 * (sector / 2.0 - ax.copy_offset);
      ax.panel.push_back(polar_point(inner * 0.5, ax.angle - reach));
      constexpr int kArc = 12;
      for (int s = 0; s <= kArc; ++s) {
        const double t = ax.angle - reach + 2.0 * reach * s / kArc;
        ax.panel.push_back(polar_point(outer + 0.02, t));
      }
      ax.panel.push_back(polar_point(inner * 0.5, ax.angle + reach));
    }
  }

  // Node radii and inter-axis degrees.
  std::vector<double> radius(layout.node_count(), 0.0);
  for (NodeId node = 0; node < layout.node_count(); ++node) {
    radius[node] = slot_radius(layout.position(node), layout.axis_size(layout.axis_of(node)));
  }
  std::vector<std::size_t> inter_degree(graph.vertex_count(), 0);
  for (const auto& e : graph.edges()) {
    if (base.alpha[e.u] != base.alpha[e.v]) {
      ++inter_degree[e.u];
      ++inter_degree[e.v];
    }
  }
  std::size_t max_degree = 1;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) max_degree = std::max(max_degree, graph.degree(v));

  doc.vertices.reserve(graph.vertex_count());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const auto& ax = doc.axes[base.alpha[v]];
    VertexGeometry vg;
    vg.vertex = v;
    vg.axis = base.alpha[v];
    vg.index = layout.position(v);
    vg.radius = radius[v];
    if (ax.expanded) {
      vg.marks = {polar_point(vg.radius, ax.angle + ax.copy_offset),
                  polar_point(vg.radius, ax.angle - ax.copy_offset)};
    } else {
      vg.marks = {polar_point(vg.radius, ax.angle)};
    }
    vg.degree = graph.degree(v);
    vg.inter_axis_degree = inter_degree[v];
    vg.mark_radius = style.vertex_radius;
    if (style.scale_by_degree) {
      const double share = std::sqrt(static_cast<double>(vg.degree) / static_cast<double>(max_degree));
      vg.mark_radius = style.vertex_radius * (0.5 + 1.5 * share);
    }
    vg.color = ax.color;
    doc.vertices.push_back(std::move(vg));
  }

  for (const auto& d : layout.dummies()) {
    doc.dummies.push_back(DummyGeometry{d.id, d.axis, layout.position(d.id), d.edge,
                                        polar_point(radius[d.id], doc.axes[d.axis].angle)});
  }

  // Chains of inter-axis edges, oriented clockwise.
  std::vector<std::vector<NodeId>> chains(graph.edge_count());
  for (const auto& link : layout.links()) {
    if (!layout.is_dummy(link.a) && !layout.is_dummy(link.b)) chains[link.edge] = {link.a, link.b};
  }
  for (const auto& route : layout.routes()) chains[route.edge] = route.chain;

  doc.edges.reserve(graph.edge_count());
  for (std::size_t ei = 0; ei < graph.edge_count(); ++ei) {
    const auto& e = graph.edge(ei);
    EdgeGeometry eg;
    eg.edge = ei;
    if (base.alpha[e.u] == base.alpha[e.v]) {
      const auto& ax = doc.axes[base.alpha[e.u]];
      const bool u_first = base.pi[e.u] < base.pi[e.v];
      eg.source = u_first ? e.u : e.v;
      eg.target = u_first ? e.v : e.u;
      eg.kind = EdgeKind::kIntra;
      eg.color = ax.color;
      eg.visible = ax.expanded;
      if (ax.expanded) {
        const double minus = ax.angle - ax.copy_offset;
        const double plus = ax.angle + ax.copy_offset;
        // Source on the clockwise copy, target on the counter-clockwise one.
        append_piece(eg.path, radius[eg.target], minus, radius[eg.source], plus,
                     style.control_fraction);
        std::reverse(eg.path.begin(), eg.path.end());
        if (style.symmetric_intra) {
          append_piece(eg.mirror_path, radius[eg.source], minus, radius[eg.target], plus,
                       style.control_fraction);
        }
      }
      doc.edges.push_back(std::move(eg));
      continue;
    }

    const auto& chain = chains[ei];
    eg.source = chain.front();
    eg.target = chain.back();
    eg.kind = chain.size() > 2 ? EdgeKind::kLong : EdgeKind::kProper;
    eg.color = doc.axes[base.alpha[eg.source]].color;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const auto& from = doc.axes[layout.axis_of(chain[i])];
      const auto& to = doc.axes[layout.axis_of(chain[i + 1])];
      if (i > 0 && from.expanded) {
        // Pass between the two copies of an expanded axis inside the gap.
        append_piece(eg.path, radius[chain[i]], from.angle - from.copy_offset, radius[chain[i]],
                     from.angle + from.copy_offset, style.control_fraction);
      }
      const double start = from.angle + from.copy_offset;
      const double end = from.angle + sector - to.copy_offset;
      append_piece(eg.path, radius[chain[i]], start, radius[chain[i + 1]], end,
                   style.control_fraction);
    }
    doc.edges.push_back(std::move(eg));
  }
  return doc;
}

bool label_rotated(double angle_degrees, double band_degrees) {
  double a = std::fmod(angle_degrees, 360.0);
  if (a < 0.0) a += 360.0;
  const double distance = std::min(std::abs(a - 90.0), std::abs(a - 270.0));
  return distance <= band_degrees + 1e-9;
}

GeometryDoc place_labels(GeometryDoc geometry, const Graph& graph, const RenderStyle& style) {
  geometry.labels.clear();
  if (!style.labels) return geometry;
  constexpr double kOffset = 0.022;
  for (const auto& vg : geometry.vertices) {
    const auto& ax = geometry.axes.at(vg.axis);
    const double angle = ax.angle + ax.copy_offset;
    const Point tangent = clockwise_tangent(angle);
    LabelGeometry label;
    label.vertex = vg.vertex;
    label.text = graph.label(vg.vertex);
    label.anchor = vg.marks.front() + (kOffset + vg.mark_radius) * tangent;
    label.rotation_degrees =
        label_rotated(ax.angle * 180.0 / kPi, style.label_band_degrees) ? style.label_rotation_degrees : 0.0;
    label.anchor_end = tangent.x < -1e-9;
    geometry.labels.push_back(std::move(label));
  }
  return geometry;
}

}  // namespace hive
