#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hive/augmented_layout.hpp"
#include "hive/crossings.hpp"
#include "hive/graph.hpp"

namespace hive {

/// Normalized drawing coordinates: the hive fits in [-1, 1]^2, x grows to
/// the right and y grows downwards (SVG orientation). Angles are measured
/// clockwise from vertical-up.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Color {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  std::string hex() const;
  friend bool operator==(const Color&, const Color&) = default;
};

struct RenderStyle {
  double canvas_size = 800.0;   // SVG width and height in px
  double axis_length = 0.8;     // outer axis radius in normalized units
  double inner_radius = 0.08;   // fraction of the axis length kept clear
  std::set<AxisId> expanded_axes;
  double intra_share = 0.4;     // share of an axis' angular room used by intra edges when expanded
  bool symmetric_intra = false;
  double label_band_degrees = 25.0;
  double label_rotation_degrees = 45.0;
  double vertex_radius = 0.012;
  bool scale_by_degree = false;
  bool labels = true;
  double control_fraction = 0.35;  // perpendicular control length over chord
};

/// Empty when the style is consistent, else a description of the problem.
std::string check_style(const RenderStyle& style);

struct AxisGeometry {
  AxisId axis = 0;
  std::size_t position = 0;
  double angle = 0.0;         // radians
  bool expanded = false;
  double copy_offset = 0.0;   // angular offset of the a+ / a- copies, radians
  Color color;
  /// Drawn axis pieces; gaps holding dummies are left open. Expanded axes
  /// list the pieces of both copies.
  std::vector<std::pair<Point, Point>> lines;
  /// Background wedge behind an expanded axis (empty when collapsed).
  std::vector<Point> panel;
};

struct VertexGeometry {
  VertexId vertex = 0;
  AxisId axis = 0;
  std::size_t index = 0;   // drawing-order index on the axis
  double radius = 0.0;     // distance from the center
  std::vector<Point> marks;  // one per drawn copy
  double mark_radius = 0.0;
  Color color;
  std::size_t degree = 0;
  std::size_t inter_axis_degree = 0;
};

struct DummyGeometry {
  NodeId id = 0;
  AxisId axis = 0;
  std::size_t index = 0;
  std::size_t edge = 0;
  Point position;
};

enum class EdgeKind { kProper, kLong, kIntra };

const char* edge_kind_name(EdgeKind kind);

struct EdgeGeometry {
  std::size_t edge = 0;
  VertexId source = 0;  // counter-clockwise end for inter-axis edges
  VertexId target = 0;
  EdgeKind kind = EdgeKind::kProper;
  bool visible = true;
  Color color;
  /// Chain of cubic Bezier pieces: p0, c, c, p1, c, c, p2, ...
  std::vector<Point> path;
  /// Mirrored intra-edge path for symmetric drawing (empty otherwise).
  std::vector<Point> mirror_path;
};

struct LabelGeometry {
  VertexId vertex = 0;
  std::string text;
  Point anchor;
  double rotation_degrees = 0.0;
  bool anchor_end = false;  // text extends to the left of the anchor
};

struct GeometryDoc {
  std::size_t k = 0;
  std::size_t gaps = 1;
  std::vector<AxisGeometry> axes;
  std::vector<VertexGeometry> vertices;
  std::vector<DummyGeometry> dummies;
  std::vector<EdgeGeometry> edges;
  std::vector<LabelGeometry> labels;
};

/// Cartesian point at `radius` on the ray at `angle`.
Point polar_point(double radius, double angle);

/// Axis angle 2 pi p / k for cyclic position p.
double axis_angle(std::size_t position, std::size_t k);

GeometryDoc compute_geometry(const AugmentedLayout& layout, const Graph& graph,
                             const RenderStyle& style);

/// Cyclic colormap lookup; angle in radians, wraps at 2 pi.
Color axis_color(double angle);

/// Fills `labels`: clockwise of each axis, horizontal unless the axis lies
/// within the style's band around the horizontal direction, then rotated.
GeometryDoc place_labels(GeometryDoc geometry, const Graph& graph, const RenderStyle& style);

/// True when labels on an axis at `angle_degrees` get rotated.
bool label_rotated(double angle_degrees, double band_degrees);

std::string render_svg(const GeometryDoc& geometry, const RenderStyle& style);

struct LayoutMeta {
  std::uint64_t seed = 0;
  CrossingReport crossings;
};

/// Layout JSON exchanged with the viewer: sorted keys, numbers with six
/// decimals, byte-stable for a fixed layout.
std::string export_layout_json(const AugmentedLayout& layout, const Graph& graph,
                               const GeometryDoc& geometry, const LayoutMeta& meta);

/// Re-serializes any JSON text in the canonical form used by
/// export_layout_json. Throws HiveError on parse errors.
std::string canonicalize_json(const std::string& text);

struct LoadedLayout {
  Graph graph;
  AugmentedLayout layout;
  LayoutMeta meta;
};

/// Rebuilds graph and layout from an exported document. Throws HiveError for
/// schema violations; invariant checks are left to validate_layout.
LoadedLayout load_layout_json(const std::string& text);

}  // namespace hive
