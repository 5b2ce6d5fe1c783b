#include <cstdio>
#include <sstream>
#include <string>

#include "hive/render.hpp"

namespace hive {
namespace {

constexpr double kViewExtent = 1.1;

class SvgWriter {
 public:
  explicit SvgWriter(double size) : size_(size) {}

  std::string px(double v) const { return num((v + kViewExtent) / (2.0 * kViewExtent) * size_); }
  std::string len(double v) const { return num(v / (2.0 * kViewExtent) * size_); }

  std::string path_data(const std::vector<Point>& path) const {
    std::string d;
    if (path.empty()) return d;
    d += "M" + px(path[0].x) + "," + px(path[0].y);
    for (std::size_t i = 1; i + 2 < path.size(); i += 3) {
      d += " C" + px(path[i].x) + "," + px(path[i].y) + " " + px(path[i + 1].x) + "," +
           px(path[i + 1].y) + " " + px(path[i + 2].x) + "," + px(path[i + 2].y);
    }
    return d;
  }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
  }

 private:
  double size_;
};

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const GeometryDoc& geometry, const RenderStyle& style) {
  const SvgWriter w(style.canvas_size);
  const auto size = SvgWriter::num(style.canvas_size);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  out << "<g class=\"panels\">\n";
  for (const auto& ax : geometry.axes) {
    if (ax.panel.empty()) continue;
    out << "<path class=\"axis-panel\" d=\"M" << w.px(ax.panel[0].x) << "," << w.px(ax.panel[0].y);
    for (std::size_t i = 1; i < ax.panel.size(); ++i) {
      out << " L" << w.px(ax.panel[i].x) << "," << w.px(ax.panel[i].y);
    }
    out << " Z\" fill=\"#d3d3d3\" fill-opacity=\"0.3\" stroke=\"none\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"axes\" stroke-linecap=\"round\">\n";
  for (const auto& ax : geometry.axes) {
    for (const auto& [a, b] : ax.lines) {
      out << "<line class=\"axis\" data-axis=\"" << ax.axis << "\" x1=\"" << w.px(a.x) << "\" y1=\""
          << w.px(a.y) << "\" x2=\"" << w.px(b.x) << "\" y2=\"" << w.px(b.y)
          << "\" stroke=\"#404040\" stroke-width=\"2.00\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g class=\"edges\" fill=\"none\">\n";
  for (const auto& e : geometry.edges) {
    if (!e.visible || e.path.empty()) continue;
    const char* cls = e.kind == EdgeKind::kIntra ? "edge intra" : "edge inter";
    const char* opacity = e.kind == EdgeKind::kIntra ? "0.55" : "0.85";
    out << "<path class=\"" << cls << "\" data-edge=\"" << e.edge << "\" d=\"" << w.path_data(e.path)
        << "\" stroke=\"" << e.color.hex() << "\" stroke-opacity=\"" << opacity
        << "\" stroke-width=\"1.20\"/>\n";
    if (!e.mirror_path.empty()) {
      out << "<path class=\"" << cls << " mirror\" data-edge=\"" << e.edge << "\" d=\""
          << w.path_data(e.mirror_path) << "\" stroke=\"" << e.color.hex() << "\" stroke-opacity=\""
          << opacity << "\" stroke-width=\"1.20\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g class=\"vertices\" stroke=\"#202020\" stroke-width=\"0.50\">\n";
  for (const auto& v : geometry.vertices) {
    for (const auto& m : v.marks) {
      out << "<circle class=\"vertex\" data-vertex=\"" << v.vertex << "\" cx=\"" << w.px(m.x)
          << "\" cy=\"" << w.px(m.y) << "\" r=\"" << w.len(v.mark_radius) << "\" fill=\""
          << v.color.hex() << "\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"9\" fill=\"#202020\">\n";
  for (const auto& l : geometry.labels) {
    const auto x = w.px(l.anchor.x);
    const auto y = w.px(l.anchor.y);
    out << "<text class=\"label\" x=\"" << x << "\" y=\"" << y << "\" text-anchor=\""
        << (l.anchor_end ? "end" : "start") << "\" dominant-baseline=\"middle\"";
    if (l.rotation_degrees != 0.0) {
      const double signed_rotation = l.anchor_end ? -l.rotation_degrees : l.rotation_degrees;
      out << " transform=\"rotate(" << SvgWriter::num(signed_rotation) << " " << x << " " << y << ")\"";
    }
    out << ">" << escape_xml(l.text) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace hive
