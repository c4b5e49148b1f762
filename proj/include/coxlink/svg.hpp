#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>

#include "coxlink/chord.hpp"

namespace coxlink {

struct SvgOptions {
  double size = 400;        // width and height in px
  bool endpoint_labels = true;
  std::string title;
};

namespace detail {

struct Point {
  double x, y;
};

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// SVG 1.1 drawing of a chord system: endpoint k at angle pi*k/n, chords as
/// arcs of circles orthogonal to the boundary, an arrowhead at each head and
/// the order position (l_i) as label.
inline std::string render_svg(const ChordSystem& s, const SvgOptions& opt = {}) {
  using detail::num;
  using detail::Point;
  const int n = s.size();
  const double half = opt.size / 2, radius = opt.size * 0.4;
  auto unit = [&](int k) {
    const double a = std::numbers::pi * k / n;
    return Point{std::cos(a), std::sin(a)};
  };
  // Screen coordinates: y grows downward.
  auto screen = [&](Point p) { return Point{half + radius * p.x, half - radius * p.y}; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(opt.size) << "\" height=\""
     << num(opt.size) << "\" viewBox=\"0 0 " << num(opt.size) << ' ' << num(opt.size) << "\">\n";
  if (!opt.title.empty()) os << "  <title>" << detail::xml_escape(opt.title) << "</title>\n";
  os << "  <defs>\n"
        "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" "
        "orient=\"auto\">\n"
        "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/>\n"
        "    </marker>\n"
        "  </defs>\n";
  os << "  <circle class=\"boundary\" cx=\"" << num(half) << "\" cy=\"" << num(half) << "\" r=\"" << num(radius)
     << "\" fill=\"none\" stroke=\"#888\"/>\n";

  for (int p = 0; p < n; ++p) {
    const OrientedChord& c = s.at(p);
    const Point pt = unit(c.tail), ph = unit(c.head);
    const Point st = screen(pt), sh = screen(ph);
    int sep = std::abs(c.head - c.tail);
    sep = std::min(sep, 2 * n - sep);
    Point label{};
    os << "  <path class=\"chord\" data-position=\"" << p + 1 << "\" data-tail=\"" << c.tail << "\" data-head=\""
       << c.head << "\" d=\"M " << num(st.x) << ' ' << num(st.y);
    if (sep == n) {
      os << " L " << num(sh.x) << ' ' << num(sh.y);
      label = {pt.x + 0.35 * (ph.x - pt.x), pt.y + 0.35 * (ph.y - pt.y)};
    } else {
      // Circle orthogonal to the boundary through both endpoints.
      const double theta = std::numbers::pi * sep / n;
      const double dist = 1 / std::cos(theta / 2), r = std::tan(theta / 2);
      const Point mid{(pt.x + ph.x) / 2, (pt.y + ph.y) / 2};
      const double ml = std::hypot(mid.x, mid.y);
      const Point centre{mid.x / ml * dist, mid.y / ml * dist};
      const Point sc = screen(centre);
      const double cross = (st.x - sc.x) * (sh.y - sc.y) - (st.y - sc.y) * (sh.x - sc.x);
      os << " A " << num(radius * r) << ' ' << num(radius * r) << " 0 0 " << (cross > 0 ? 1 : 0) << ' '
         << num(sh.x) << ' ' << num(sh.y);
      label = {centre.x / dist * (dist - r), centre.y / dist * (dist - r)};
    }
    os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
    const Point sl = screen(label);
    os << "  <text class=\"chord-label\" x=\"" << num(sl.x) << "\" y=\"" << num(sl.y)
       << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#b00\">" << p + 1 << "</text>\n";
  }

  for (int k = 0; k < 2 * n; ++k) {
    const Point e = screen(unit(k));
    os << "  <circle class=\"endpoint\" data-index=\"" << k << "\" cx=\"" << num(e.x) << "\" cy=\"" << num(e.y)
       << "\" r=\"3\" fill=\"black\"/>\n";
    if (opt.endpoint_labels) {
      const Point t = screen(Point{1.1 * unit(k).x, 1.1 * unit(k).y});
      os << "  <text class=\"endpoint-label\" x=\"" << num(t.x) << "\" y=\"" << num(t.y + 4)
         << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#555\">" << k << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace coxlink
