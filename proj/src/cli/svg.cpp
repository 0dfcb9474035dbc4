#include <algorithm>
#include <cmath>
#include <sstream>

#include "rba/cli.hpp"
#include "rba/square.hpp"

namespace rba::cli {

namespace {

const char* kPalette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                          "#42d4f4", "#f032e6", "#bfef45", "#469990", "#9a6324"};

struct View {
  double x0, x1, y0, y1, scale;
  double px(double x) const { return (x - x0) * scale; }
  double py(double y) const { return (y1 - y) * scale; }
  double cx(double x) const { return std::clamp(x, x0, x1); }
  double cy(double y) const { return std::clamp(y, y0, y1); }
};

void extend(double& lo, double& hi, double v) {
  if (!std::isfinite(v)) return;
  lo = std::min(lo, v);
  hi = std::max(hi, v);
}

void extend_box(View& v, const Box& b) {
  for (double x : {b.left.value(), b.right.value()}) extend(v.x0, v.x1, x);
  for (double y : {b.bottom.value(), b.top.value()}) extend(v.y0, v.y1, y);
}

std::pair<Box, Box> boxes_of(const Annulus& a) {
  return std::visit(
      [](const auto& s) -> std::pair<Box, Box> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Strip> || std::is_same_v<T, LCorridor>) {
          const SquareAnnulus q = as_square(s);
          return {q.outer, q.inner()};
        } else if constexpr (std::is_same_v<T, SquareAnnulus>) {
          return {s.outer, s.inner()};
        } else if constexpr (std::is_same_v<T, RectAnnulus>) {
          return {s.outer, s.inner};
        } else {
          return {};
        }
      },
      a);
}

void rect_path(std::ostream& o, const View& v, const Box& b) {
  const double l = v.px(v.cx(b.left)), r = v.px(v.cx(b.right));
  const double t = v.py(v.cy(b.top)), btm = v.py(v.cy(b.bottom));
  o << "M" << l << ' ' << t << "H" << r << "V" << btm << "H" << l << "Z";
}

void box_sides(std::ostream& o, const View& v, const Box& b) {
  const double l = v.cx(b.left), r = v.cx(b.right), bt = v.cy(b.bottom), t = v.cy(b.top);
  auto side = [&](double xa, double ya, double xb, double yb, bool infinite) {
    o << "    <line x1=\"" << v.px(xa) << "\" y1=\"" << v.py(ya) << "\" x2=\"" << v.px(xb) << "\" y2=\""
      << v.py(yb) << "\"" << (infinite ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
  };
  side(l, t, r, t, !b.top.finite());
  side(l, bt, r, bt, !b.bottom.finite());
  side(l, bt, l, t, !b.left.finite());
  side(r, bt, r, t, !b.right.finite());
}

}  // namespace

std::string render_svg(const PointSet& ps, const Annulus& annulus) {
  View v{kInf, -kInf, kInf, -kInf, 1.0};
  for (const auto& p : ps.points()) {
    extend(v.x0, v.x1, p.x);
    extend(v.y0, v.y1, p.y);
  }
  const auto* circle = std::get_if<CircularAnnulus>(&annulus);
  const auto [outer, inner] = boxes_of(annulus);
  if (circle) {
    extend(v.x0, v.x1, circle->center_x - circle->r_out);
    extend(v.x0, v.x1, circle->center_x + circle->r_out);
    extend(v.y0, v.y1, circle->center_y - circle->r_out);
    extend(v.y0, v.y1, circle->center_y + circle->r_out);
  } else {
    extend_box(v, outer);
    extend_box(v, inner);
  }
  const double span = std::max({v.x1 - v.x0, v.y1 - v.y0, 1e-9});
  v.x0 -= 0.05 * span;
  v.x1 += 0.05 * span;
  v.y0 -= 0.05 * span;
  v.y1 += 0.05 * span;
  v.scale = 800.0 / std::max(v.x1 - v.x0, v.y1 - v.y0);
  const double w = (v.x1 - v.x0) * v.scale, h = (v.y1 - v.y0) * v.scale;

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h << "\" width=\"" << w
    << "\" height=\"" << h << "\">\n";
  o << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  o << "  <g class=\"annulus\" data-shape=\"" << shape_name(annulus)
    << "\" stroke=\"#333\" stroke-width=\"1.5\">\n";
  o << "    <path fill=\"#ffe9a8\" fill-rule=\"evenodd\" stroke=\"none\" d=\"";
  if (circle) {
    for (double r : {circle->r_out, circle->r_in}) {
      const double x = v.px(circle->center_x), y = v.py(circle->center_y), rr = r * v.scale;
      o << "M" << x - rr << ' ' << y << "a" << rr << ' ' << rr << " 0 1 0 " << 2 * rr << " 0a" << rr << ' ' << rr
        << " 0 1 0 " << -2 * rr << " 0Z";
    }
  } else {
    rect_path(o, v, outer);
    rect_path(o, v, inner);
  }
  o << "\"/>\n";
  if (circle) {
    for (double r : {circle->r_out, circle->r_in})
      o << "    <circle cx=\"" << v.px(circle->center_x) << "\" cy=\"" << v.py(circle->center_y) << "\" r=\""
        << r * v.scale << "\" fill=\"none\"/>\n";
  } else {
    box_sides(o, v, outer);
    box_sides(o, v, inner);
  }
  o << "  </g>\n";
  o << "  <g class=\"points\">\n";
  for (const auto& p : ps.points()) {
    const int c = p.color.value;
    o << "    <circle class=\"point color-" << c << "\" cx=\"" << v.px(p.x) << "\" cy=\"" << v.py(p.y)
      << "\" r=\"4\" fill=\"" << kPalette[(c - 1) % 10] << "\"/>\n";
  }
  o << "  </g>\n</svg>\n";
  return o.str();
}

}  // namespace rba::cli
