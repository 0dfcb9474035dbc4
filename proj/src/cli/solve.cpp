#include <chrono>
#include <cmath>
#include <stdexcept>

#include "rba/cli.hpp"
#include "rba/lcorridor.hpp"
#include "rba/rect.hpp"
#include "rba/square.hpp"
#include "rba/strip.hpp"

namespace rba::cli {

namespace {

const char* kShapeTags[] = {"strip", "lcorridor", "square", "rect", "circle"};

std::string corridor_name(CorridorOrientation o) {
  static const char* names[] = {"down-right", "down-left", "up-right", "up-left"};
  return names[static_cast<int>(o)];
}

// The outer side that carries an input point; the solver anchors on it.
std::string rect_anchor(const RectAnnulus& a, const PointSet& ps) {
  const Box& o = a.outer;
  auto on = [&](auto pred) {
    for (const auto& p : ps.points())
      if (pred(p)) return true;
    return false;
  };
  auto within_x = [&](const ColoredPoint& p) { return p.x >= o.left && p.x <= o.right; };
  auto within_y = [&](const ColoredPoint& p) { return p.y >= o.bottom && p.y <= o.top; };
  if (on([&](const auto& p) { return p.y == o.top && within_x(p); })) return "top";
  if (on([&](const auto& p) { return p.y == o.bottom && within_x(p); })) return "bottom";
  if (on([&](const auto& p) { return p.x == o.right && within_y(p); })) return "right";
  if (on([&](const auto& p) { return p.x == o.left && within_y(p); })) return "left";
  return "none";
}

}  // namespace

Shape parse_shape(const std::string& name) {
  for (int i = 0; i < 5; ++i)
    if (name == kShapeTags[i]) return static_cast<Shape>(i);
  throw std::invalid_argument("unknown shape \"" + name + "\"");
}

std::string shape_tag(Shape shape) { return kShapeTags[static_cast<int>(shape)]; }

std::optional<SolutionReport> solve(Shape shape, const PointSet& ps, const SolveOptions& opt) {
  if (opt.line && shape != Shape::Circle) throw std::invalid_argument("--line requires --shape circle");
  const auto start = std::chrono::steady_clock::now();
  std::optional<SolutionReport> r;
  switch (shape) {
    case Shape::Strip:
      if (auto s = max_rbes_any(ps))
        r = SolutionReport{*s, s->width(), s->orientation == StripOrientation::Vertical ? "vertical" : "horizontal"};
      break;
    case Shape::LCorridor:
      if (auto l = max_rblc_all(ps)) r = SolutionReport{*l, l->width, corridor_name(l->orientation)};
      break;
    case Shape::Square:
      if (auto s = max_rbsa(ps, opt.threads)) {
        static const char* cfg[] = {"C1", "C2", "C3"};
        r = SolutionReport{s->annulus, s->annulus.delta, cfg[static_cast<int>(s->config)]};
      }
      break;
    case Shape::Rect:
      if (auto a = max_rbra(ps, opt.fast, opt.threads))
        r = SolutionReport{*a, a->width(), "anchor-" + rect_anchor(*a, ps) + (opt.fast ? " fast" : " slow")};
      break;
    case Shape::Circle:
      if (opt.line) {
        if (auto a = max_rbca_on_line(ps, *opt.line)) r = SolutionReport{*a, a->width(), "line"};
      } else if (auto s = max_rbca(ps, opt.threads)) {
        r = SolutionReport{s->annulus, s->annulus.width(), kind_name(s->provenance)};
      }
      break;
  }
  if (r)
    r->elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

double loglog_slope(const std::vector<BenchRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (const auto& r : rows) {
    if (r.n == 0 || !(r.mean_ms > 0)) continue;
    const double x = std::log(static_cast<double>(r.n)), y = std::log(r.mean_ms);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return 0.0;
  const double den = m * sxx - sx * sx;
  return den == 0 ? 0.0 : (m * sxy - sx * sy) / den;
}

std::vector<BenchRow> bench(Shape shape, const std::vector<std::size_t>& sizes, int k, int trials,
                            std::uint64_t seed, const SolveOptions& options) {
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    BenchRow row{n, k, 0.0, 0.0};
    for (int t = 0; t < trials; ++t) {
      const PointSet ps(generate(n, k, Distribution::Uniform, seed + 1000003ULL * n + static_cast<std::uint64_t>(t)));
      const auto start = std::chrono::steady_clock::now();
      const auto r = solve(shape, ps, options);
      row.mean_ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      row.width += r ? r->width : 0.0;
    }
    row.mean_ms /= trials;
    row.width /= trials;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rba::cli
