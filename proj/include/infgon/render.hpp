#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "infgon/diagonal.hpp"

namespace infgon {

struct RenderSpec {
  Pos window = 8;
  double size = 600.0;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

// Disk picture of the window members: one circle, open circles for limit
// points, tick marks for window vertices, a curved chord per member.
// The arctan angle map compresses each bi-infinite arc into its angular
// sector, so ticks visibly accumulate at the limit points.
inline std::string render_svg(const ZModel& z, const DiagonalSet& s,
                              const RenderSpec& spec = {}) {
  const double size = spec.size;
  const double cx = size / 2, cy = size / 2;
  const double r = size * 0.42;
  const int n = z.limit_count();
  const double pi = 3.14159265358979323846;
  auto limit_angle = [&](int i) { return 2 * pi * i / n; };
  auto vertex_angle = [&](const Vertex& v) {
    double sigma = 0.5 + std::atan(0.35 * static_cast<double>(v.pos)) / pi;
    return limit_angle(v.arc) + sigma * (2 * pi / n);
  };
  auto px = [&](double ang, double rad) { return cx + rad * std::cos(ang); };
  auto py = [&](double ang, double rad) { return cy - rad * std::sin(ang); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         detail::fmt(size) + "\" height=\"" + detail::fmt(size) + "\">\n";
  svg += "<circle cx=\"" + detail::fmt(cx) + "\" cy=\"" + detail::fmt(cy) +
         "\" r=\"" + detail::fmt(r) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (int arc = 0; arc < n; ++arc) {
    for (Pos k = -spec.window; k <= spec.window; ++k) {
      double a = vertex_angle(Vertex{arc, k});
      svg += "<line class=\"tick\" x1=\"" + detail::fmt(px(a, r - 4)) +
             "\" y1=\"" + detail::fmt(py(a, r - 4)) + "\" x2=\"" +
             detail::fmt(px(a, r + 4)) + "\" y2=\"" + detail::fmt(py(a, r + 4)) +
             "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
  }
  for (const Diagonal& d : truncate_window(z, s, spec.window)) {
    double a1 = vertex_angle(d.a), a2 = vertex_angle(d.b);
    double mx = (px(a1, r) + px(a2, r)) / 2, my = (py(a1, r) + py(a2, r)) / 2;
    double qx = cx + (mx - cx) * 0.35, qy = cy + (my - cy) * 0.35;
    svg += "<path class=\"chord\" d=\"M " + detail::fmt(px(a1, r)) + " " +
           detail::fmt(py(a1, r)) + " Q " + detail::fmt(qx) + " " +
           detail::fmt(qy) + " " + detail::fmt(px(a2, r)) + " " +
           detail::fmt(py(a2, r)) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (int i = 0; i < n; ++i) {
    double a = limit_angle(i);
    svg += "<circle class=\"limit\" cx=\"" + detail::fmt(px(a, r)) +
           "\" cy=\"" + detail::fmt(py(a, r)) +
           "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace infgon
