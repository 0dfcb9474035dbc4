#include "rba/core.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace rba {

namespace {

double initial_epsilon() {
  if (const char* env = std::getenv("RBA_EPSILON")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && std::isfinite(v) && v >= 0.0) return v;
  }
  return 1e-9;
}

std::atomic<double>& epsilon_slot() {
  static std::atomic<double> eps{initial_epsilon()};
  return eps;
}

}  // namespace

double epsilon() { return epsilon_slot().load(std::memory_order_relaxed); }
void set_epsilon(double eps) { epsilon_slot().store(eps, std::memory_order_relaxed); }

PointSet::PointSet(std::vector<ColoredPoint> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  for (const auto& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("point coordinates must be finite");
    if (p.color.value < 1) throw std::invalid_argument("colors must be positive integers");
    k_ = std::max(k_, p.color.value);
  }
  color_count_.assign(static_cast<std::size_t>(k_), 0);
  for (const auto& p : points_) ++color_count_[static_cast<std::size_t>(p.color.value - 1)];
  for (int c = 0; c < k_; ++c) {
    if (color_count_[static_cast<std::size_t>(c)] < 2)
      throw std::invalid_argument("color " + std::to_string(c + 1) +
                                  " must have at least two points");
  }
  if (n == 0) throw std::invalid_argument("point set is empty");
  if (static_cast<std::size_t>(2 * k_) > n) throw std::invalid_argument("k must not exceed n/2");

  by_x_.resize(n);
  std::iota(by_x_.begin(), by_x_.end(), std::size_t{0});
  by_y_ = by_x_;
  std::sort(by_x_.begin(), by_x_.end(), [&](std::size_t a, std::size_t b) {
    const auto& p = points_[a];
    const auto& q = points_[b];
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return a < b;
  });
  std::sort(by_y_.begin(), by_y_.end(), [&](std::size_t a, std::size_t b) {
    const auto& p = points_[a];
    const auto& q = points_[b];
    if (p.y != q.y) return p.y < q.y;
    if (p.x != q.x) return p.x < q.x;
    return a < b;
  });
}

bool is_rainbow(std::span<const int> counts) {
  return std::all_of(counts.begin(), counts.end(), [](int c) { return c >= 1; });
}

ColoredPoint AxisMap::apply(const ColoredPoint& p) const {
  ColoredPoint q = p;
  if (swap_xy) std::swap(q.x, q.y);
  if (flip_x) q.x = -q.x;
  if (flip_y) q.y = -q.y;
  return q;
}

ColoredPoint AxisMap::invert(const ColoredPoint& p) const {
  ColoredPoint q = p;
  if (flip_x) q.x = -q.x;
  if (flip_y) q.y = -q.y;
  if (swap_xy) std::swap(q.x, q.y);
  return q;
}

PointSet AxisMap::apply(const PointSet& ps) const {
  std::vector<ColoredPoint> pts;
  pts.reserve(ps.size());
  for (const auto& p : ps.points()) pts.push_back(apply(p));
  return PointSet(std::move(pts));
}

Box Box::offset(double delta) const {
  return Box{left.value() + delta, right.value() - delta, bottom.value() + delta,
             top.value() - delta};
}

unsigned SquareAnnulus::infinite_sides() const {
  unsigned m = kSideNone;
  if (!outer.top.finite()) m |= kSideTop;
  if (!outer.bottom.finite()) m |= kSideBottom;
  if (!outer.left.finite()) m |= kSideLeft;
  if (!outer.right.finite()) m |= kSideRight;
  return m;
}

double SquareAnnulus::center_x() const {
  if (!outer.left.finite() || !outer.right.finite()) return std::nan("");
  return 0.5 * (outer.left.value() + outer.right.value());
}

double SquareAnnulus::center_y() const {
  if (!outer.bottom.finite() || !outer.top.finite()) return std::nan("");
  return 0.5 * (outer.bottom.value() + outer.top.value());
}

ExtendedCoord SquareAnnulus::radius() const {
  if (infinite_sides() != kSideNone) return ExtendedCoord::pos_inf();
  return 0.5 * (outer.right.value() - outer.left.value());
}

namespace {
double side_gap(ExtendedCoord outer, ExtendedCoord inner, bool outer_is_low) {
  if (!outer.finite()) return kInf;
  return outer_is_low ? inner.value() - outer.value() : outer.value() - inner.value();
}
}  // namespace

double RectAnnulus::top_width() const { return side_gap(outer.top, inner.top, false); }
double RectAnnulus::bottom_width() const { return side_gap(outer.bottom, inner.bottom, true); }
double RectAnnulus::left_width() const { return side_gap(outer.left, inner.left, true); }
double RectAnnulus::right_width() const { return side_gap(outer.right, inner.right, false); }

double RectAnnulus::width() const {
  return std::min({top_width(), bottom_width(), left_width(), right_width()});
}

bool RectAnnulus::uniform() const {
  const double w = width();
  const double eps = epsilon();
  for (double s : {top_width(), bottom_width(), left_width(), right_width()}) {
    if (std::isfinite(s) && std::abs(s - w) > eps) return false;
  }
  return true;
}

double width_of(const Annulus& a) {
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LCorridor>) {
          return s.width;
        } else {
          return s.width();
        }
      },
      a);
}

std::string shape_name(const Annulus& a) {
  static const char* names[] = {"strip", "lcorridor", "square", "rect", "circle"};
  return names[a.index()];
}

namespace {

// Inside when within the closed box grown by eps; outside when on or beyond
// the boundary of `outer`.
bool in_closed_box(const ColoredPoint& p, const Box& b, double eps) {
  return p.x >= b.left.value() - eps && p.x <= b.right.value() + eps &&
         p.y >= b.bottom.value() - eps && p.y <= b.top.value() + eps;
}

bool outside_open_box(const ColoredPoint& p, const Box& b, double eps) {
  return p.x <= b.left.value() + eps || p.x >= b.right.value() - eps ||
         p.y <= b.bottom.value() + eps || p.y >= b.top.value() - eps;
}

Region classify_boxes(const ColoredPoint& p, const Box& outer, const Box& inner) {
  const double eps = epsilon();
  if (in_closed_box(p, inner, eps)) return Region::InsideRegion;
  if (outside_open_box(p, outer, eps)) return Region::OutsideRegion;
  return Region::AnnulusInterior;
}

// Outer box of a corridor: the two outer sides through the corner, the other
// two at infinity.
Box corridor_box(const LCorridor& l) {
  Box b;
  switch (l.orientation) {
    case CorridorOrientation::DownRight:
      b.left = l.corner_x;
      b.top = l.corner_y;
      break;
    case CorridorOrientation::DownLeft:
      b.right = l.corner_x;
      b.top = l.corner_y;
      break;
    case CorridorOrientation::UpRight:
      b.left = l.corner_x;
      b.bottom = l.corner_y;
      break;
    case CorridorOrientation::UpLeft:
      b.right = l.corner_x;
      b.bottom = l.corner_y;
      break;
  }
  return b;
}

Box strip_box(const Strip& s) {
  Box b;
  if (s.orientation == StripOrientation::Vertical)
    b.right = s.hi;
  else
    b.top = s.hi;
  return b;
}

}  // namespace

Region classify(const ColoredPoint& p, const Annulus& a) {
  return std::visit(
      [&](const auto& s) -> Region {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Strip>) {
          const Box outer = strip_box(s);
          return classify_boxes(p, outer, outer.offset(s.width()));
        } else if constexpr (std::is_same_v<T, LCorridor>) {
          const Box outer = corridor_box(s);
          return classify_boxes(p, outer, outer.offset(s.width));
        } else if constexpr (std::is_same_v<T, SquareAnnulus>) {
          return classify_boxes(p, s.outer, s.inner());
        } else if constexpr (std::is_same_v<T, RectAnnulus>) {
          return classify_boxes(p, s.outer, s.inner);
        } else {
          const double eps = epsilon();
          const double d = std::hypot(p.x - s.center_x, p.y - s.center_y);
          if (d <= s.r_in + eps) return Region::InsideRegion;
          if (d >= s.r_out - eps) return Region::OutsideRegion;
          return Region::AnnulusInterior;
        }
      },
      a);
}

RegionCounts count_regions(const Annulus& a, const PointSet& ps) {
  RegionCounts rc;
  rc.inside.assign(static_cast<std::size_t>(ps.k()), 0);
  rc.outside.assign(static_cast<std::size_t>(ps.k()), 0);
  for (const auto& p : ps.points()) {
    const auto c = static_cast<std::size_t>(p.color.value - 1);
    switch (classify(p, a)) {
      case Region::InsideRegion: ++rc.inside[c]; break;
      case Region::OutsideRegion: ++rc.outside[c]; break;
      case Region::AnnulusInterior: ++rc.interior; break;
    }
  }
  return rc;
}

namespace {
bool well_formed(const Annulus& a) {
  return std::visit(
      [](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RectAnnulus>) {
          const Box& o = s.outer;
          const Box& i = s.inner;
          return i.left >= o.left && i.right <= o.right && i.bottom >= o.bottom &&
                 i.top <= o.top && i.left <= i.right && i.bottom <= i.top;
        } else if constexpr (std::is_same_v<T, CircularAnnulus>) {
          return s.r_in >= 0.0 && s.r_in <= s.r_out;
        } else if constexpr (std::is_same_v<T, SquareAnnulus>) {
          if (s.infinite_sides() == kSideNone) {
            const double side_x = s.outer.right - s.outer.left;
            const double side_y = s.outer.top - s.outer.bottom;
            if (std::abs(side_x - side_y) > epsilon()) return false;
            if (s.delta > 0.5 * side_x + epsilon()) return false;
          }
          return s.delta >= 0.0;
        } else {
          return true;
        }
      },
      a);
}
}  // namespace

bool validate_solution(const Annulus& a, const PointSet& ps) {
  const double w = width_of(a);
  if (!(w > epsilon()) || !std::isfinite(w)) return false;
  if (!well_formed(a)) return false;
  const RegionCounts rc = count_regions(a, ps);
  return rc.interior == 0 && is_rainbow(rc.inside) && is_rainbow(rc.outside);
}

}  // namespace rba
