#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "bicross/layout_io.hpp"

namespace bicross {

namespace detail {

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace detail

/// Renders a layout as a standalone SVG: guide circles from the arrangement
/// metadata, one line per edge, one dot per vertex (class "va" / "vb").
/// Output bytes are a pure function of the document and width.
inline std::string render_svg(const LayoutDocument& doc, int width_px = 800) {
  if (width_px < 32) width_px = 32;
  struct Ring {
    double radius;
  };
  std::vector<Ring> rings;
  if (doc.arrangement == "dc") {
    if (doc.params.contains("r")) rings.push_back({doc.params["r"].get<double>()});
    if (doc.params.contains("R")) rings.push_back({doc.params["R"].get<double>()});
  } else if (doc.arrangement == "lic" || doc.arrangement == "fic") {
    if (doc.params.contains("R_circle"))
      rings.push_back({doc.params["R_circle"].get<double>()});
  }

  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  bool first = true;
  auto extend = [&](double x, double y) {
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    } else {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  };
  for (const Point2& p : doc.layout.part_a) extend(p.x, p.y);
  for (const Point2& p : doc.layout.part_b) extend(p.x, p.y);
  for (const Ring& ring : rings) {
    extend(-ring.radius, -ring.radius);
    extend(ring.radius, ring.radius);
  }
  const double span_x = std::max(max_x - min_x, 1e-9);
  const double span_y = std::max(max_y - min_y, 1e-9);
  const double pad = 0.05 * std::max(span_x, span_y);
  const double scale = (static_cast<double>(width_px)) / (span_x + 2.0 * pad);
  const int height_px =
      static_cast<int>(std::max(32.0, scale * (span_y + 2.0 * pad)));

  auto px = [&](double x) { return (x - min_x + pad) * scale; };
  auto py = [&](double y) { return (max_y - y + pad) * scale; };  // y grows upward

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\""
      << height_px << "\" viewBox=\"0 0 " << width_px << " " << height_px << "\">\n";
  for (const Ring& ring : rings) {
    out << "  <circle class=\"ring\" cx=\"" << detail::svg_num(px(0.0)) << "\" cy=\""
        << detail::svg_num(py(0.0)) << "\" r=\"" << detail::svg_num(ring.radius * scale)
        << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }
  out << "  <g stroke=\"#7a7a7a\" stroke-width=\"0.6\" stroke-opacity=\"0.8\">\n";
  for (const Point2& a : doc.layout.part_a) {
    for (const Point2& b : doc.layout.part_b) {
      out << "    <line x1=\"" << detail::svg_num(px(a.x)) << "\" y1=\""
          << detail::svg_num(py(a.y)) << "\" x2=\"" << detail::svg_num(px(b.x))
          << "\" y2=\"" << detail::svg_num(py(b.y)) << "\"/>\n";
    }
  }
  out << "  </g>\n";
  for (const Point2& p : doc.layout.part_a) {
    out << "  <circle class=\"va\" cx=\"" << detail::svg_num(px(p.x)) << "\" cy=\""
        << detail::svg_num(py(p.y)) << "\" r=\"3.5\" fill=\"#d62728\"/>\n";
  }
  for (const Point2& p : doc.layout.part_b) {
    out << "  <circle class=\"vb\" cx=\"" << detail::svg_num(px(p.x)) << "\" cy=\""
        << detail::svg_num(py(p.y)) << "\" r=\"3.5\" fill=\"#1f77b4\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace bicross
