#include "rba/lcorridor.hpp"

#include <algorithm>
#include <stdexcept>

namespace rba {

namespace {
constexpr std::size_t npos = static_cast<std::size_t>(-1);
}  // namespace

ExtendedCoord Staircase::x_at(ExtendedCoord y) const {
  auto it = kind == Kind::Lower
                ? std::upper_bound(corners.begin(), corners.end(), y.value(),
                                   [](double v, const Corner& c) { return v < c.y; })
                : std::lower_bound(corners.begin(), corners.end(), y.value(),
                                   [](const Corner& c, double v) { return c.y < v; });
  if (it == corners.begin()) return ExtendedCoord::neg_inf();
  return std::prev(it)->x;
}

std::pair<Staircase, Staircase> build_staircases(const PointSet& ps) {
  const auto k = static_cast<std::size_t>(ps.k());
  const auto order = ps.by_y();

  // Lower: per-color running max x among points with y <= Y; the staircase
  // value is the minimum over colors. A min-tree over colors keeps it current.
  Staircase lower{Staircase::Kind::Lower, {}};
  std::size_t base = 1;
  while (base < k) base <<= 1;
  std::vector<double> tree(2 * base, kInf);
  for (std::size_t c = 0; c < k; ++c) tree[base + c] = -kInf;
  for (std::size_t v = base; v-- > 1;) tree[v] = std::min(tree[2 * v], tree[2 * v + 1]);

  for (std::size_t t = 0; t < order.size();) {
    const double y = ps[order[t]].y;
    for (; t < order.size() && ps[order[t]].y == y; ++t) {
      const auto& p = ps[order[t]];
      std::size_t v = base + static_cast<std::size_t>(p.color.value - 1);
      if (p.x <= tree[v]) continue;
      tree[v] = p.x;
      for (v >>= 1; v >= 1; v >>= 1) tree[v] = std::min(tree[2 * v], tree[2 * v + 1]);
    }
    const double x = tree[1];
    if (x == -kInf) continue;
    if (lower.corners.empty() || x > lower.corners.back().x) lower.corners.push_back({x, y});
  }

  // Upper: a color is missing from {y >= Y} exactly when all its points lie
  // below Y, and then only its leftmost point can be picked up by {x <= X}.
  struct Extent {
    double max_y;
    double min_x;
  };
  std::vector<Extent> ext(k, Extent{-kInf, kInf});
  for (const auto& p : ps.points()) {
    auto& e = ext[static_cast<std::size_t>(p.color.value - 1)];
    e.max_y = std::max(e.max_y, p.y);
    e.min_x = std::min(e.min_x, p.x);
  }
  std::sort(ext.begin(), ext.end(), [](const Extent& a, const Extent& b) { return a.max_y < b.max_y; });
  Staircase upper{Staircase::Kind::Upper, {}};
  double running = -kInf;
  for (std::size_t c = 0; c < ext.size();) {
    const double y = ext[c].max_y;
    for (; c < ext.size() && ext[c].max_y == y; ++c) running = std::max(running, ext[c].min_x);
    if (upper.corners.empty() || running > upper.corners.back().x) upper.corners.push_back({running, y});
  }
  return {std::move(lower), std::move(upper)};
}

MaxCoordTree::MaxCoordTree(const PointSet& ps) : size_(ps.size()) {
  while (base_ < size_) base_ <<= 1;
  xs_.reserve(size_);
  for (std::size_t idx : ps.by_y()) xs_.push_back(ps[idx].x);
  tree_.assign(2 * base_, npos);
  for (std::size_t r = 0; r < size_; ++r) tree_[base_ + r] = r;
  auto better = [&](std::size_t a, std::size_t b) {
    if (a == npos) return b;
    if (b == npos) return a;
    return xs_[b] > xs_[a] ? b : a;
  };
  for (std::size_t v = base_; v-- > 1;) tree_[v] = better(tree_[2 * v], tree_[2 * v + 1]);
}

std::optional<std::size_t> MaxCoordTree::argmax(std::size_t lo, std::size_t hi) const {
  std::size_t best = npos;
  auto take = [&](std::size_t r) {
    if (r == npos) return;
    if (best == npos || xs_[r] > xs_[best]) best = r;
  };
  for (lo += base_, hi += base_; lo < hi; lo >>= 1, hi >>= 1) {
    if (lo & 1) take(tree_[lo++]);
    if (hi & 1) take(tree_[--hi]);
  }
  if (best == npos) return std::nullopt;
  return best;
}

GapTree::GapTree(std::vector<double> xs) : xs_(std::move(xs)) {
  if (!std::is_sorted(xs_.begin(), xs_.end()))
    throw std::invalid_argument("GapTree universe must be sorted");
  while (base_ < xs_.size()) base_ <<= 1;
  tree_.assign(2 * base_, Node{});
}

GapTree::Node GapTree::merge(const Node& a, const Node& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  Node m;
  m.count = a.count + b.count;
  m.min_x = a.min_x;
  m.max_x = b.max_x;
  m.gap = a.gap;
  m.gap_left = a.gap_left;
  const double cross = b.min_x - a.max_x;
  if (cross > m.gap) {
    m.gap = cross;
    m.gap_left = a.max_x;
  }
  if (b.gap > m.gap) {
    m.gap = b.gap;
    m.gap_left = b.gap_left;
  }
  return m;
}

void GapTree::insert(std::size_t slot) {
  std::size_t v = base_ + slot;
  if (tree_[v].count != 0) return;
  tree_[v] = Node{1, xs_[slot], xs_[slot], -1.0, 0.0};
  ++active_;
  for (v >>= 1; v >= 1; v >>= 1) tree_[v] = merge(tree_[2 * v], tree_[2 * v + 1]);
}

GapTree::Node GapTree::query(std::size_t lo, std::size_t hi) const {
  Node left_acc, right_acc;
  for (lo += base_, hi += base_; lo < hi; lo >>= 1, hi >>= 1) {
    if (lo & 1) left_acc = merge(left_acc, tree_[lo++]);
    if (hi & 1) right_acc = merge(tree_[--hi], right_acc);
  }
  return merge(left_acc, right_acc);
}

GapResult GapTree::max_gap(ExtendedCoord lo, ExtendedCoord hi) const {
  const auto first = static_cast<std::size_t>(
      std::lower_bound(xs_.begin(), xs_.end(), lo.value()) - xs_.begin());
  const auto last = static_cast<std::size_t>(
      std::upper_bound(xs_.begin(), xs_.end(), hi.value()) - xs_.begin());
  const Node inner = first < last ? query(first, last) : Node{};
  if (inner.count == 0) return {hi.value() - lo.value(), lo};
  GapResult r{inner.min_x - lo.value(), lo};
  if (inner.gap > r.gap) r = {inner.gap, inner.gap_left};
  if (hi.value() - inner.max_x > r.gap) r = {hi.value() - inner.max_x, inner.max_x};
  return r;
}

CorridorSweep::CorridorSweep(const PointSet& ps) : ps_(ps), max_tree_(ps) {
  ys_.reserve(ps.size());
  for (std::size_t idx : ps.by_y()) ys_.push_back(ps[idx].y);
  std::tie(lower_, upper_) = build_staircases(ps);
}

CorridorSweep::BoundaryPoints CorridorSweep::boundary_points(double y_i, double w_best) const {
  BoundaryPoints bp;
  const auto band_lo =
      static_cast<std::size_t>(std::upper_bound(ys_.begin(), ys_.end(), y_i) - ys_.begin());
  const auto j = static_cast<std::size_t>(
      std::upper_bound(ys_.begin(), ys_.end(), y_i + w_best) - ys_.begin());
  std::size_t band_hi = ys_.size();
  if (j < ys_.size()) {
    bp.j = j;
    band_hi = j;
  }
  if (band_lo < band_hi) bp.k = max_tree_.argmax(band_lo, band_hi);
  return bp;
}

std::pair<ExtendedCoord, ExtendedCoord> CorridorSweep::rainbow_range(double y_i,
                                                                     ExtendedCoord y_j) const {
  return {upper_.x_at(y_j), lower_.x_at(y_i)};
}

std::optional<LCorridor> CorridorSweep::run(std::vector<Step>* trace) {
  const std::size_t n = ps_.size();
  const auto order = ps_.by_y();
  std::vector<double> xs;
  xs.reserve(n);
  for (std::size_t idx : ps_.by_x()) xs.push_back(ps_[idx].x);
  // slot of each point inside the x-sorted universe
  std::vector<std::size_t> slot(n);
  for (std::size_t r = 0; r < n; ++r) slot[ps_.by_x()[r]] = r;
  GapTree gaps(xs);

  std::optional<LCorridor> best;
  double best_w = 0.0;
  for (std::size_t t = 0; t < n;) {
    const double y_i = ys_[t];
    for (; t < n && ys_[t] == y_i; ++t) gaps.insert(slot[order[t]]);
    const ExtendedCoord inner_limit = lower_.x_at(y_i);
    if (!inner_limit.finite()) continue;

    for (;;) {
      const BoundaryPoints bp = boundary_points(y_i, best_w);
      const ExtendedCoord y_j = bp.j ? ExtendedCoord(ys_[*bp.j]) : ExtendedCoord::pos_inf();
      const double band_x = bp.k ? max_tree_.x_at_rank(*bp.k) : -kInf;
      const auto [upper_x, lower_x] = rainbow_range(y_i, y_j);
      const ExtendedCoord lo = std::max(band_x, upper_x.value());
      if (lo > lower_x) break;
      const GapResult g = gaps.max_gap(lo, lower_x);
      const double w = std::min(y_j.value() - y_i, g.gap);
      if (!(w > best_w)) break;
      best_w = w;
      best = LCorridor{CorridorOrientation::DownRight, g.left, y_j, w};
      if (trace) trace->push_back({t - 1, bp.j.value_or(n), w});
    }
  }
  return best;
}

AxisMap corridor_frame(CorridorOrientation orientation) {
  switch (orientation) {
    case CorridorOrientation::DownRight: return AxisMap{};
    case CorridorOrientation::DownLeft: return AxisMap{false, true, false};
    case CorridorOrientation::UpRight: return AxisMap{false, false, true};
    case CorridorOrientation::UpLeft: return AxisMap{false, true, true};
  }
  return AxisMap{};
}

std::optional<LCorridor> max_rblc(const PointSet& ps, CorridorOrientation orientation) {
  const AxisMap frame = corridor_frame(orientation);
  const PointSet mapped = frame.apply(ps);
  CorridorSweep sweep(mapped);
  auto found = sweep.run();
  if (!found) return std::nullopt;
  LCorridor out = *found;
  out.orientation = orientation;
  if (frame.flip_x) out.corner_x = -out.corner_x.value();
  if (frame.flip_y) out.corner_y = -out.corner_y.value();
  return out;
}

std::optional<LCorridor> max_rblc_all(const PointSet& ps) {
  std::optional<LCorridor> best;
  for (auto o : {CorridorOrientation::DownRight, CorridorOrientation::DownLeft,
                 CorridorOrientation::UpRight, CorridorOrientation::UpLeft}) {
    auto c = max_rblc(ps, o);
    if (c && (!best || c->width > best->width)) best = c;
  }
  return best;
}

}  // namespace rba
