#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "hive/render.hpp"

namespace hive::testing {

inline Point bezier(const Point& p0, const Point& p1, const Point& p2, const Point& p3, double t) {
  const double s = 1.0 - t;
  const double a = s * s * s, b = 3 * s * s * t, c = 3 * s * t * t, d = t * t * t;
  return {a * p0.x + b * p1.x + c * p2.x + d * p3.x, a * p0.y + b * p1.y + c * p2.y + d * p3.y};
}

inline std::vector<Point> sample_path(const std::vector<Point>& path, int samples = 64) {
  std::vector<Point> out;
  if (path.empty()) return out;
  out.push_back(path[0]);
  for (std::size_t i = 1; i + 2 < path.size(); i += 3) {
    for (int s = 1; s <= samples; ++s) {
      out.push_back(bezier(path[i - 1], path[i], path[i + 1], path[i + 2], static_cast<double>(s) / samples));
    }
  }
  return out;
}

// Strict crossing of segments ab and cd; touching within `eps` does not count.
inline bool segments_cross(Point a, Point b, Point c, Point d, double eps = 1e-9) {
  auto orient = [&](Point p, Point q, Point r) {
    const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return v > eps ? 1 : (v < -eps ? -1 : 0);
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

/// Number of (edge, axis line) pairs where a sampled edge path crosses a
/// drawn axis line.
inline std::size_t count_axis_hits(const GeometryDoc& doc, int samples = 64) {
  std::size_t hits = 0;
  for (const auto& e : doc.edges) {
    for (const auto* path : {&e.path, &e.mirror_path}) {
      const auto pts = sample_path(*path, samples);
      for (const auto& ax : doc.axes) {
        for (const auto& [a, b] : ax.lines) {
          bool hit = false;
          for (std::size_t i = 0; i + 1 < pts.size() && !hit; ++i) hit = segments_cross(pts[i], pts[i + 1], a, b);
          if (hit) ++hits;
        }
      }
    }
  }
  return hits;
}

}  // namespace hive::testing
