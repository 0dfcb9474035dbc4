#include "rba/square.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rba {

std::optional<CenterSegment> c3_center_segment(const ColoredPoint& p_lo, const ColoredPoint& p_hi) {
  if (!(p_lo.y < p_hi.y)) throw std::invalid_argument("c3_center_segment requires y(p_lo) < y(p_hi)");
  CenterSegment s;
  s.radius = 0.5 * (p_hi.y - p_lo.y);
  s.y = 0.5 * (p_lo.y + p_hi.y);
  s.a = std::max(p_lo.x, p_hi.x) - s.radius;
  s.b = std::min(p_lo.x, p_hi.x) + s.radius;
  if (s.a > s.b) return std::nullopt;
  return s;
}

namespace {

struct BandPoint {
  double x;
  double dy;  // |y - center_y|, below the radius for band points
  std::size_t color;
};

// Strict total order used for deterministic ties: larger width, then smaller
// center x, then smaller center y.
bool better(const SquareAnnulus& a, const std::optional<SquareAnnulus>& best) {
  if (!best) return true;
  if (a.delta != best->delta) return a.delta > best->delta;
  const double ax = a.center_x(), bx = best->center_x();
  if (ax != bx) return ax < bx;
  return a.center_y() < best->center_y();
}

// Sliding window over the band points with c - r < x < c + r. Both window
// ends only move right as the queried center increases.
class Window {
 public:
  Window(const std::vector<BandPoint>& band, std::span<const int> totals, double r)
      : band_(band), totals_(totals), r_(r), inside_(totals.size(), 0) {}

  void move_to(double c) {
    while (hi_ < band_.size() && band_[hi_].x < c + r_) push(hi_++);
    while (lo_ < hi_ && !(band_[lo_].x > c - r_)) pop(lo_++);
  }

  bool empty() const { return lo_ == hi_; }
  bool feasible() const { return colors_in_ == inside_.size() && exhausted_ == 0; }
  double x_min() const { return band_[lo_].x; }
  double x_max() const { return band_[hi_ - 1].x; }
  double dy_max() const { return band_[deque_.front()].dy; }

 private:
  void push(std::size_t t) {
    const std::size_t c = band_[t].color;
    if (inside_[c]++ == 0) ++colors_in_;
    if (inside_[c] == totals_[c]) ++exhausted_;
    while (!deque_.empty() && band_[deque_.back()].dy <= band_[t].dy) deque_.pop_back();
    deque_.push_back(t);
  }
  void pop(std::size_t t) {
    const std::size_t c = band_[t].color;
    if (inside_[c] == totals_[c]) --exhausted_;
    if (--inside_[c] == 0) --colors_in_;
    if (!deque_.empty() && deque_.front() == t) deque_.pop_front();
  }

  const std::vector<BandPoint>& band_;
  std::span<const int> totals_;
  double r_;
  std::vector<int> inside_;
  std::size_t colors_in_ = 0;
  std::size_t exhausted_ = 0;  // colors with no point left outside
  std::size_t lo_ = 0, hi_ = 0;
  std::deque<std::size_t> deque_;
};

std::optional<SquareAnnulus> best_on_pair(const PointSet& ps, const ColoredPoint& p_lo,
                                          const ColoredPoint& p_hi, std::vector<BandPoint>& band,
                                          std::vector<double>& events) {
  if (!(p_lo.y < p_hi.y)) return std::nullopt;
  const auto seg = c3_center_segment(p_lo, p_hi);
  if (!seg) return std::nullopt;
  const double r = seg->radius;
  const auto k = static_cast<std::size_t>(ps.k());

  band.clear();
  std::vector<int> band_colors(k, 0);
  std::size_t distinct = 0;
  for (std::size_t idx : ps.by_x()) {
    const auto& p = ps[idx];
    if (!(p.y > p_lo.y && p.y < p_hi.y)) continue;
    const auto c = static_cast<std::size_t>(p.color.value - 1);
    if (band_colors[c]++ == 0) ++distinct;
    band.push_back({p.x, std::abs(p.y - seg->y), c});
  }
  // the inside region is a subset of the band
  if (distinct < k) return std::nullopt;

  events.clear();
  events.push_back(seg->a);
  events.push_back(seg->b);
  for (const auto& q : band) {
    for (double e : {q.x - r, q.x + r})
      if (e > seg->a && e < seg->b) events.push_back(e);
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  Window win(band, ps.color_count(), r);
  std::optional<SquareAnnulus> best;
  auto offer = [&](double c, double rho) {
    const double w = r - rho;
    if (!(w > 0.0)) return;
    SquareAnnulus a{Box{c - r, c + r, p_lo.y, p_hi.y}, w};
    if (better(a, best)) best = a;
  };
  for (std::size_t t = 0; t < events.size(); ++t) {
    const double e = events[t];
    win.move_to(e);
    if (!win.empty() && win.feasible())
      offer(e, std::max({e - win.x_min(), win.x_max() - e, win.dy_max()}));
    if (t + 1 == events.size()) break;
    // open interval (e, next): the window is constant, the width is concave
    // and peaks at the midpoint of the window's x extent
    const double next = events[t + 1];
    win.move_to(0.5 * (e + next));
    if (win.empty() || !win.feasible()) continue;
    const double mid = 0.5 * (win.x_min() + win.x_max());
    if (mid > e && mid < next)
      offer(mid, std::max(0.5 * (win.x_max() - win.x_min()), win.dy_max()));
  }
  return best;
}

SquareAnnulus transpose(const SquareAnnulus& s) {
  return SquareAnnulus{Box{s.outer.bottom, s.outer.top, s.outer.left, s.outer.right}, s.delta};
}

std::optional<SquareAnnulus> c3_top_bottom(const PointSet& ps, unsigned threads) {
  const std::size_t n = ps.size();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::optional<SquareAnnulus>> partial(threads);
  auto work = [&](unsigned tid) {
    std::vector<BandPoint> band;
    std::vector<double> events;
    for (std::size_t i = tid; i < n; i += threads) {
      for (std::size_t j = 0; j < n; ++j) {
        auto a = best_on_pair(ps, ps[i], ps[j], band, events);
        if (a && better(*a, partial[tid])) partial[tid] = a;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::optional<SquareAnnulus> best;
  for (auto& p : partial)
    if (p && better(*p, best)) best = p;
  return best;
}

}  // namespace

std::optional<SquareAnnulus> best_annulus_on_segment(const PointSet& ps, std::size_t lo_index,
                                                     std::size_t hi_index) {
  std::vector<BandPoint> band;
  std::vector<double> events;
  return best_on_pair(ps, ps[lo_index], ps[hi_index], band, events);
}

std::optional<SquareAnnulus> max_rbsa_c3(const PointSet& ps, unsigned threads) {
  auto vertical = c3_top_bottom(ps, threads);
  const PointSet swapped = AxisMap{true, false, false}.apply(ps);
  auto horizontal = c3_top_bottom(swapped, threads);
  if (horizontal) horizontal = transpose(*horizontal);
  if (horizontal && better(*horizontal, vertical)) return horizontal;
  return vertical;
}

SquareAnnulus as_square(const Strip& s) {
  Box outer;
  if (s.orientation == StripOrientation::Vertical)
    outer.right = s.hi;
  else
    outer.top = s.hi;
  return SquareAnnulus{outer, s.width()};
}

SquareAnnulus as_square(const LCorridor& l) {
  Box outer;
  switch (l.orientation) {
    case CorridorOrientation::DownRight: outer.left = l.corner_x; outer.top = l.corner_y; break;
    case CorridorOrientation::DownLeft: outer.right = l.corner_x; outer.top = l.corner_y; break;
    case CorridorOrientation::UpRight: outer.left = l.corner_x; outer.bottom = l.corner_y; break;
    case CorridorOrientation::UpLeft: outer.right = l.corner_x; outer.bottom = l.corner_y; break;
  }
  return SquareAnnulus{outer, l.width};
}

std::optional<SquareSolution> max_rbsa(const PointSet& ps, unsigned threads) {
  std::optional<SquareSolution> best;
  auto consider = [&](const SquareAnnulus& a, SquareConfig cfg) {
    if (!best || a.delta > best->annulus.delta) best = SquareSolution{a, cfg};
  };
  if (auto s = max_rbes_any(ps)) consider(as_square(*s), SquareConfig::C1);
  if (auto l = max_rblc_all(ps)) consider(as_square(*l), SquareConfig::C2);
  if (auto c = max_rbsa_c3(ps, threads)) consider(*c, SquareConfig::C3);
  return best;
}

}  // namespace rba
