#include "rba/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rba::oracle {

namespace {

// Rainbow test of the points selected by `pick`, recounted from scratch.
template <class Pick>
bool rainbow_where(const PointSet& ps, Pick pick) {
  std::vector<char> seen(static_cast<std::size_t>(ps.k()), 0);
  for (const auto& p : ps.points())
    if (pick(p)) seen[static_cast<std::size_t>(p.color.value - 1)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<double> coords(const PointSet& ps, bool use_x) {
  std::vector<double> v;
  for (const auto& p : ps.points()) v.push_back(use_x ? p.x : p.y);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::optional<Strip> oracle_rbes(const PointSet& ps, StripOrientation orientation) {
  const bool vx = orientation == StripOrientation::Vertical;
  auto c = [vx](const ColoredPoint& p) { return vx ? p.x : p.y; };
  std::optional<Strip> best;
  for (const auto& a : ps.points()) {
    for (const auto& b : ps.points()) {
      const double lo = c(a), hi = c(b);
      if (!(lo < hi)) continue;
      bool empty = true;
      for (const auto& p : ps.points())
        if (c(p) > lo && c(p) < hi) empty = false;
      if (!empty) continue;
      if (!rainbow_where(ps, [&](const ColoredPoint& p) { return c(p) <= lo; })) continue;
      if (!rainbow_where(ps, [&](const ColoredPoint& p) { return c(p) >= hi; })) continue;
      if (!best || hi - lo > best->width() || (hi - lo == best->width() && lo < best->lo))
        best = Strip{orientation, lo, hi};
    }
  }
  return best;
}

std::optional<LCorridor> oracle_rblc(const PointSet& ps) {
  struct Frame {
    CorridorOrientation o;
    double sx, sy;
  };
  const Frame frames[] = {{CorridorOrientation::DownRight, 1, 1},
                          {CorridorOrientation::DownLeft, -1, 1},
                          {CorridorOrientation::UpRight, 1, -1},
                          {CorridorOrientation::UpLeft, -1, -1}};
  std::optional<LCorridor> best;
  for (const auto& f : frames) {
    std::vector<double> cxs = {-kInf}, cys = {kInf};
    for (const auto& p : ps.points()) {
      cxs.push_back(f.sx * p.x);
      cys.push_back(f.sy * p.y);
    }
    for (double cx : cxs) {
      for (double cy : cys) {
        if (!std::isfinite(cx) && !std::isfinite(cy)) continue;
        auto outside = [&](const ColoredPoint& p) { return f.sx * p.x <= cx || f.sy * p.y >= cy; };
        double w = kInf;
        for (const auto& p : ps.points()) {
          if (outside(p)) continue;
          w = std::min({w, f.sx * p.x - cx, cy - f.sy * p.y});
        }
        if (!(w > 0.0) || !std::isfinite(w)) continue;
        if (!rainbow_where(ps, outside)) continue;
        if (!rainbow_where(ps, [&](const ColoredPoint& p) { return !outside(p); })) continue;
        if (!best || w > best->width)
          best = LCorridor{f.o, f.sx * cx, f.sy * cy, w};
      }
    }
  }
  return best;
}

namespace {

// Square with the given outer box (finite), delta set to the widest valid
// value, or nullopt.
std::optional<SquareAnnulus> evaluate_square(const PointSet& ps, double cx, double cy, double r) {
  auto strictly_in = [&](const ColoredPoint& p) {
    return std::abs(p.x - cx) < r && std::abs(p.y - cy) < r;
  };
  double rho = 0.0;
  bool any = false;
  for (const auto& p : ps.points()) {
    if (!strictly_in(p)) continue;
    any = true;
    rho = std::max({rho, std::abs(p.x - cx), std::abs(p.y - cy)});
  }
  if (!any || !(r - rho > 0.0)) return std::nullopt;
  if (!rainbow_where(ps, strictly_in)) return std::nullopt;
  if (!rainbow_where(ps, [&](const ColoredPoint& p) { return !strictly_in(p); })) return std::nullopt;
  return SquareAnnulus{Box{cx - r, cx + r, cy - r, cy + r}, r - rho};
}

std::optional<SquareAnnulus> three_sided_family(const PointSet& ps, bool transposed) {
  std::vector<ColoredPoint> pts(ps.points().begin(), ps.points().end());
  if (transposed)
    for (auto& p : pts) std::swap(p.x, p.y);
  const PointSet q(pts);
  std::optional<SquareAnnulus> best;
  for (const auto& lo : q.points()) {
    for (const auto& hi : q.points()) {
      if (!(lo.y < hi.y)) continue;
      const double r = 0.5 * (hi.y - lo.y), cy = 0.5 * (lo.y + hi.y);
      const double a = std::max(lo.x, hi.x) - r, b = std::min(lo.x, hi.x) + r;
      if (a > b) continue;
      std::vector<double> cand = {a, b};
      for (const auto& p : q.points()) {
        cand.push_back(p.x);
        cand.push_back(p.x - r);
        cand.push_back(p.x + r);
        const double d = std::abs(p.y - cy);
        cand.push_back(p.x - d);
        cand.push_back(p.x + d);
        for (const auto& s : q.points()) cand.push_back(0.5 * (p.x + s.x));
      }
      for (double c : cand) {
        if (c < a || c > b) continue;
        auto s = evaluate_square(q, c, cy, r);
        if (s && (!best || s->delta > best->delta)) best = s;
      }
    }
  }
  if (best && transposed) {
    const Box o = best->outer;
    best->outer = Box{o.bottom, o.top, o.left, o.right};
  }
  return best;
}

}  // namespace

std::optional<SquareAnnulus> oracle_rbsa(const PointSet& ps) {
  std::optional<SquareAnnulus> best;
  auto offer = [&](const SquareAnnulus& s) {
    if (!best || s.delta > best->delta) best = s;
  };
  for (auto o : {StripOrientation::Vertical, StripOrientation::Horizontal}) {
    if (auto s = oracle_rbes(ps, o)) {
      Box outer;
      (o == StripOrientation::Vertical ? outer.right : outer.top) = s->hi;
      offer(SquareAnnulus{outer, s->width()});
    }
  }
  if (auto l = oracle_rblc(ps)) {
    Box outer;
    const bool down = l->orientation == CorridorOrientation::DownRight ||
                      l->orientation == CorridorOrientation::DownLeft;
    const bool right = l->orientation == CorridorOrientation::DownRight ||
                       l->orientation == CorridorOrientation::UpRight;
    (right ? outer.left : outer.right) = l->corner_x;
    (down ? outer.top : outer.bottom) = l->corner_y;
    offer(SquareAnnulus{outer, l->width});
  }
  for (bool t : {false, true})
    if (auto s = three_sided_family(ps, t)) offer(*s);
  return best;
}

std::optional<RectAnnulus> oracle_rbra(const PointSet& ps) {
  std::vector<double> xs = coords(ps, true), ys = coords(ps, false);
  std::vector<double> ls = xs, rs = xs, bs = ys, ts = ys;
  ls.push_back(-kInf);
  rs.push_back(kInf);
  bs.push_back(-kInf);
  ts.push_back(kInf);
  std::optional<RectAnnulus> best;
  double best_w = 0.0;
  for (double l : ls)
    for (double r : rs) {
      if (!(l < r)) continue;
      for (double b : bs)
        for (double t : ts) {
          if (!(b < t)) continue;
          auto in_open = [&](const ColoredPoint& p) {
            return p.x > l && p.x < r && p.y > b && p.y < t;
          };
          double w = kInf;
          bool any = false;
          for (const auto& p : ps.points()) {
            if (!in_open(p)) continue;
            any = true;
            w = std::min({w, p.x - l, r - p.x, p.y - b, t - p.y});
          }
          if (!any || !(w > best_w) || !std::isfinite(w)) continue;
          if (!rainbow_where(ps, in_open)) continue;
          if (!rainbow_where(ps, [&](const ColoredPoint& p) { return !in_open(p); })) continue;
          const Box outer{l, r, b, t};
          best = RectAnnulus{outer, Box{l + w, r - w, b + w, t - w}};
          best_w = w;
        }
    }
  return best;
}

namespace {

// Best annulus at a center by sorting squared distances; independent of the
// solver's evaluator.
std::optional<CircularAnnulus> sampled_best(const PointSet& ps, double cx, double cy) {
  const std::size_t n = ps.size();
  const auto k = static_cast<std::size_t>(ps.k());
  std::vector<std::pair<double, int>> d;
  d.reserve(n);
  for (const auto& p : ps.points())
    d.emplace_back(std::hypot(p.x - cx, p.y - cy), p.color.value - 1);
  std::sort(d.begin(), d.end());
  std::vector<int> below(k, 0), above(k, 0);
  for (const auto& e : d) ++above[static_cast<std::size_t>(e.second)];
  std::size_t have_below = 0, have_above = k;
  std::optional<CircularAnnulus> best;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    const auto c = static_cast<std::size_t>(d[t].second);
    if (below[c]++ == 0) ++have_below;
    if (--above[c] == 0) --have_above;
    if (d[t + 1].first > d[t].first && have_below == k && have_above == k) {
      const double w = d[t + 1].first - d[t].first;
      if (!best || w > best->width()) best = CircularAnnulus{cx, cy, d[t].first, d[t + 1].first};
    }
  }
  return best;
}

// Naive evaluation: every (inner point, outer point) radius pair.
std::optional<CircularAnnulus> naive_best(const PointSet& ps, double cx, double cy) {
  std::vector<double> d;
  for (const auto& p : ps.points()) d.push_back(std::hypot(p.x - cx, p.y - cy));
  std::optional<CircularAnnulus> best;
  for (double r_in : d)
    for (double r_out : d) {
      if (!(r_out > r_in)) continue;
      bool ok = true;
      for (double e : d)
        if (e > r_in && e < r_out) ok = false;
      if (!ok) continue;
      std::size_t idx = 0;
      std::vector<char> in(static_cast<std::size_t>(ps.k()), 0), out(in.size(), 0);
      for (const auto& p : ps.points()) {
        const auto c = static_cast<std::size_t>(p.color.value - 1);
        (d[idx++] <= r_in ? in : out)[c] = 1;
      }
      if (std::count(in.begin(), in.end(), 0) || std::count(out.begin(), out.end(), 0)) continue;
      if (!best || r_out - r_in > best->width()) best = CircularAnnulus{cx, cy, r_in, r_out};
    }
  return best;
}

struct Bounds {
  double x0 = kInf, x1 = -kInf, y0 = kInf, y1 = -kInf;
};

Bounds bounds_of(const PointSet& ps) {
  Bounds b;
  for (const auto& p : ps.points()) {
    b.x0 = std::min(b.x0, p.x);
    b.x1 = std::max(b.x1, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.y1 = std::max(b.y1, p.y);
  }
  return b;
}

}  // namespace

double oracle_rbca(const PointSet& ps, int resolution) {
  const Bounds b = bounds_of(ps);
  double best = 0.0;
  const int m = std::max(resolution, 2);
  for (int i = 0; i < m; ++i) {
    const double cx = b.x0 + (b.x1 - b.x0) * i / (m - 1);
    for (int j = 0; j < m; ++j) {
      const double cy = b.y0 + (b.y1 - b.y0) * j / (m - 1);
      if (auto a = sampled_best(ps, cx, cy)) best = std::max(best, a->width());
    }
  }
  return best;
}

double oracle_rbca_on_line(const PointSet& ps, const Line& line, int samples) {
  const double norm = std::sqrt(line.a * line.a + line.b * line.b);
  const double px = line.a * line.c / (norm * norm), py = line.b * line.c / (norm * norm);
  const double ux = -line.b / norm, uy = line.a / norm;
  const Bounds b = bounds_of(ps);
  double lo = kInf, hi = -kInf;
  for (const auto& p : ps.points()) {
    const double t = (p.x - px) * ux + (p.y - py) * uy;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  const double diag = std::sqrt((b.x1 - b.x0) * (b.x1 - b.x0) + (b.y1 - b.y0) * (b.y1 - b.y0));
  lo -= diag;
  hi += diag;
  double best = 0.0;
  const int m = std::max(samples, 2);
  for (int i = 0; i < m; ++i) {
    const double t = lo + (hi - lo) * i / (m - 1);
    if (auto a = sampled_best(ps, px + t * ux, py + t * uy)) best = std::max(best, a->width());
  }
  return best;
}

std::optional<CircularAnnulus> oracle_rbca_exhaustive(const PointSet& ps) {
  const auto pts = ps.points();
  const std::size_t n = pts.size();
  std::vector<std::pair<double, double>> centers;

  // center c with |c-p| = |c-q| and |c-r| = |c-s|, solved as a 2x2 system
  auto solve = [&](double a1, double b1, double c1, double a2, double b2, double c2) {
    const double det = a1 * b2 - a2 * b1;
    if (std::abs(det) <= 1e-12 * std::hypot(a1, b1) * std::hypot(a2, b2)) return;
    centers.emplace_back((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det);
  };
  auto bis = [&](std::size_t p, std::size_t q, double& a, double& b, double& c) {
    a = 2 * (pts[q].x - pts[p].x);
    b = 2 * (pts[q].y - pts[p].y);
    c = pts[q].x * pts[q].x - pts[p].x * pts[p].x + pts[q].y * pts[q].y - pts[p].y * pts[p].y;
  };
  auto join = [&](std::size_t p, std::size_t r, double& a, double& b, double& c) {
    a = pts[r].y - pts[p].y;
    b = pts[p].x - pts[r].x;
    c = a * pts[p].x + b * pts[p].y;
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      double a1, b1, c1;
      bis(p, q, a1, b1, c1);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s) {
          if (r == p && s == q) continue;
          double a2, b2, c2;
          bis(r, s, a2, b2, c2);
          solve(a1, b1, c1, a2, b2, c2);
        }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        for (std::size_t in : {p, q}) {
          double a2, b2, c2;
          join(in, r, a2, b2, c2);
          solve(a1, b1, c1, a2, b2, c2);
        }
      }
    }
  for (const auto& p : pts) centers.emplace_back(p.x, p.y);

  // boundary of the bounding box: corners, then per edge the critical points
  // of the one-dimensional problem
  const Bounds bb = bounds_of(ps);
  for (double x : {bb.x0, bb.x1})
    for (double y : {bb.y0, bb.y1}) centers.emplace_back(x, y);
  for (int e = 0; e < 4; ++e) {
    const bool horizontal = e < 2;
    const double fixed = e == 0 ? bb.y0 : e == 1 ? bb.y1 : e == 2 ? bb.x0 : bb.x1;
    const double lo = horizontal ? bb.x0 : bb.y0, hi = horizontal ? bb.x1 : bb.y1;
    auto along = [&](const ColoredPoint& p) { return horizontal ? p.x : p.y; };
    auto across = [&](const ColoredPoint& p) { return (horizontal ? p.y : p.x) - fixed; };
    auto emit = [&](double t) {
      if (t > lo && t < hi) centers.push_back(horizontal ? std::pair{t, fixed} : std::pair{fixed, t});
    };
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double ap = along(pts[p]), aq = along(pts[q]);
        const double hp = across(pts[p]), hq = across(pts[q]);
        // equidistant: (t-ap)^2 + hp^2 = (t-aq)^2 + hq^2
        if (ap != aq) emit((aq * aq + hq * hq - ap * ap - hp * hp) / (2 * (aq - ap)));
        // on the line through p and q
        if (hp != hq) emit(ap + (aq - ap) * hp / (hp - hq));
        // on the line through p and the mirror image of q
        if (hp * hq < 0 && hp + hq != 0) emit(ap + (aq - ap) * hp / (hp + hq));
      }
  }

  std::optional<CircularAnnulus> best;
  for (const auto& [cx, cy] : centers) {
    if (!std::isfinite(cx) || !std::isfinite(cy)) continue;
    if (auto a = naive_best(ps, cx, cy); a && (!best || a->width() > best->width())) best = a;
  }
  return best;
}

}  // namespace rba::oracle
