#include "rba/rect.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace rba {

namespace {

void check_indices(std::size_t n, std::size_t i, std::optional<std::size_t> j, double w) {
  if (i >= n) throw std::invalid_argument("rank i out of range");
  if (j && !(i + 1 < *j && *j < n)) throw std::invalid_argument("rank j must satisfy i + 1 < j < n");
  if (!(w > 0.0) || !std::isfinite(w)) throw std::invalid_argument("width must be positive");
}

RectAnnulus make_witness(ExtendedCoord l, ExtendedCoord r, ExtendedCoord b, ExtendedCoord t,
                         double w) {
  const Box outer{l, r, b, t};
  return RectAnnulus{outer, outer.offset(w)};
}

// Slow decision on coordinate values: the slab is every point strictly between
// the two horizontal lines, so repeated coordinates are handled.
class SlowDecider {
 public:
  explicit SlowDecider(const RectFrame& f) : f_(f), rank_at_slot_(f.size()) {
    for (std::size_t r = 0; r < f.size(); ++r) rank_at_slot_[f.slot_of_rank(r)] = r;
    counts_.resize(static_cast<std::size_t>(f.points().k()));
  }

  DecisionOutcome decide(std::size_t i, std::optional<std::size_t> j, double w) {
    const std::size_t n = f_.size();
    check_indices(n, i, j, w);
    const ColoredPoint& pi = f_.at(i);
    const double t = pi.y;
    const double b = j ? f_.at(*j).y : -kInf;
    if (t - b < 2 * w) return {};
    const double a_x = j ? std::min(pi.x, f_.at(*j).x) : pi.x;
    const double b_x = j ? std::max(pi.x, f_.at(*j).x) : pi.x;

    slab_.clear();
    double pl = -kInf, pr = kInf;
    for (std::size_t s = 0; s < n; ++s) {
      const ColoredPoint& p = f_.at(rank_at_slot_[s]);
      if (!(p.y > b && p.y < t)) continue;
      slab_.push_back(p);
      if (!(p.y > t - w || p.y < b + w)) continue;
      if (p.x > a_x && p.x < b_x) return {};
      if (p.x <= a_x) pl = std::max(pl, p.x);
      if (p.x >= b_x) pr = std::min(pr, p.x);
    }

    // left gaps: delimiters pl, slab x in (pl, A + w), A + w
    const double aw = a_x + w;
    lefts_.clear();
    double prev = pl;
    auto left_delim = [&](double d) {
      if (d - prev >= w) lefts_.push_back({prev, first_at_least(d)});
      prev = d;
    };
    for (const auto& p : slab_)
      if (p.x > pl && p.x < aw) left_delim(p.x);
    left_delim(aw);

    // right gaps: delimiters B - w, slab x in (B - w, pr), pr
    const double bw = b_x - w;
    rights_.clear();
    prev = bw;
    auto right_delim = [&](double d) {
      if (d - prev >= w) rights_.push_back({last_at_most_end(prev), d});
      prev = d;
    };
    for (const auto& p : slab_)
      if (p.x > bw && p.x < pr) right_delim(p.x);
    right_delim(pr);
    if (lefts_.empty() || rights_.empty()) return {};

    // left-to-right scan; the window [lo, hi) of slab indices is the inside
    const std::size_t k = counts_.size();
    const auto totals = f_.points().color_count();
    std::fill(counts_.begin(), counts_.end(), 0);
    std::size_t distinct = 0, exhausted = 0, lo = 0, hi = 0, r = 0;
    auto add = [&](std::size_t q) {
      const auto c = static_cast<std::size_t>(slab_[q].color.value - 1);
      if (counts_[c]++ == 0) ++distinct;
      if (counts_[c] == totals[c]) ++exhausted;
    };
    auto remove = [&](std::size_t q) {
      const auto c = static_cast<std::size_t>(slab_[q].color.value - 1);
      if (counts_[c] == totals[c]) --exhausted;
      if (--counts_[c] == 0) --distinct;
    };
    for (const auto& lg : lefts_) {
      if (lg.start >= hi) {
        while (lo < hi) remove(lo++);
        lo = hi = lg.start;
      } else {
        while (lo < lg.start) remove(lo++);
      }
      while (distinct < k) {
        while (r < rights_.size() && rights_[r].end <= hi) ++r;
        if (r == rights_.size()) return {};
        add(hi++);
      }
      while (r < rights_.size() && rights_[r].end < hi) ++r;
      if (r == rights_.size()) return {};
      while (hi < rights_[r].end) add(hi++);
      if (exhausted == 0)
        return {true, make_witness(lg.delimiter, rights_[r].delimiter, b, t, w)};
    }
    return {};
  }

 private:
  struct LeftGap {
    double delimiter;   // outer left side
    std::size_t start;  // first slab index of the inside
  };
  struct RightGap {
    std::size_t end;    // one past the last slab index of the inside
    double delimiter;   // outer right side
  };

  std::size_t first_at_least(double x) const {
    return static_cast<std::size_t>(
        std::partition_point(slab_.begin(), slab_.end(),
                             [x](const ColoredPoint& p) { return p.x < x; }) -
        slab_.begin());
  }
  std::size_t last_at_most_end(double x) const {
    return static_cast<std::size_t>(
        std::partition_point(slab_.begin(), slab_.end(),
                             [x](const ColoredPoint& p) { return p.x <= x; }) -
        slab_.begin());
  }

  const RectFrame& f_;
  std::vector<std::size_t> rank_at_slot_;
  std::vector<ColoredPoint> slab_;
  std::vector<LeftGap> lefts_;
  std::vector<RightGap> rights_;
  std::vector<int> counts_;
};

// First rank in [lo, hi) whose y fails `above`; ranks are in descending y.
template <class Pred>
std::size_t rank_partition(const RectFrame& f, std::size_t lo, std::size_t hi, Pred above) {
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (above(f.at(mid).y))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

DecisionOutcome dp_decision(const RectFrame& frame, std::size_t i, std::optional<std::size_t> j,
                            double w) {
  SlowDecider d(frame);
  return d.decide(i, j, w);
}

DecisionOutcome dp_decision_fast(const SlabIndex& slab, std::size_t i,
                                 std::optional<std::size_t> j, double w) {
  const RectFrame& f = slab.frame();
  const std::size_t n = f.size();
  check_indices(n, i, j, w);
  if (slab.anchor() != i || slab.end() != j.value_or(n))
    throw std::invalid_argument("slab index is not current for (i, j)");

  const ColoredPoint& pi = f.at(i);
  const double t = pi.y;
  const double b = j ? f.at(*j).y : -kInf;
  if (t - b < 2 * w) return {};
  const double a_x = j ? std::min(pi.x, f.at(*j).x) : pi.x;
  const double b_x = j ? std::max(pi.x, f.at(*j).x) : pi.x;
  const std::vector<double>& xs = f.slot_xs();
  auto slot_upper = [&](double x) {
    return static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
  };
  auto slot_lower = [&](double x) {
    return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
  };

  // band neighbours of the anchors
  const std::size_t end = j.value_or(n);
  const std::size_t top_end = rank_partition(f, i + 1, end, [&](double y) { return y > t - w; });
  const std::size_t bot_begin =
      j ? rank_partition(f, top_end, end, [&](double y) { return !(y < b + w); }) : end;
  const std::size_t s_a = slot_upper(a_x), s_b = slot_lower(b_x);
  std::optional<std::size_t> pl, pr;
  for (auto [lo, hi] : {std::pair{i + 1, top_end}, std::pair{bot_begin, end}}) {
    if (lo >= hi) continue;
    if (auto q = f.max_slot_below(lo, hi, s_a); q && (!pl || *q > *pl)) pl = q;
    if (a_x < b_x) {
      if (auto q = f.min_slot_from(lo, hi, s_a); q && xs[*q] < b_x) return {};
    }
    if (auto q = f.min_slot_from(lo, hi, s_b); q && (!pr || *q < *pr)) pr = q;
  }

  const GapPointTree& g = slab.gaps();
  const ColorRangeTrees& colors = slab.colors();
  const double aw = a_x + w, bw = b_x - w;
  const std::size_t s_aw = slot_lower(aw);   // slots below have x < A + w
  const std::size_t s_bw = slot_upper(bw);   // slots below have x <= B - w

  const auto lo_l = pl ? g.next_active(*pl + 1) : g.next_active(0);
  const auto below_aw = s_aw > 0 ? g.prev_active(s_aw - 1) : std::nullopt;
  const auto from_aw = g.next_active(s_aw);
  const auto hi_l = from_aw ? from_aw : below_aw;
  const auto upto_bw = s_bw > 0 ? g.prev_active(s_bw - 1) : std::nullopt;
  const auto above_bw = g.next_active(s_bw);
  const auto r_first = upto_bw ? upto_bw : above_bw;
  const auto r_last = pr ? (*pr > 0 ? g.prev_active(*pr - 1) : std::nullopt) : g.last_active();
  if (!lo_l || !hi_l || *lo_l > *hi_l || !r_first || !r_last || *r_first > *r_last) return {};

  const std::size_t k = colors.k();
  const auto totals = f.points().color_count();

  // relevant w-gaps around one minimal rainbow interval [a1, b1]
  auto try_interval = [&](std::size_t a1, std::size_t b1) -> std::optional<RectAnnulus> {
    std::optional<std::pair<ExtendedCoord, std::size_t>> left;  // (outer left, first inside slot)
    const double last_delim = below_aw ? xs[*below_aw] : -kInf;
    if (from_aw && *from_aw <= a1 && aw - last_delim >= w) {
      left = {last_delim, *from_aw};
    } else {
      std::optional<std::size_t> q;
      if (below_aw) q = g.rightmost_at_least(pl.value_or(0), std::min(a1, *below_aw), w);
      if (q)
        left = {xs[*q], *g.next_active(*q + 1)};
      else if (!pl && *lo_l < s_aw)
        left = {ExtendedCoord::neg_inf(), *lo_l};
    }
    if (!left) return std::nullopt;

    std::optional<std::pair<std::size_t, ExtendedCoord>> right;  // (last inside slot, outer right)
    const ExtendedCoord first_delim = above_bw ? ExtendedCoord(xs[*above_bw]) : ExtendedCoord::pos_inf();
    if (upto_bw && *upto_bw >= b1 && first_delim.value() - bw >= w) {
      right = {*upto_bw, first_delim};
    } else if (above_bw) {
      const std::size_t lo = std::max(b1, *above_bw);
      if (auto q = g.leftmost_at_least(lo, pr.value_or(n), w))
        right = {*q, xs[*g.next_active(*q + 1)]};
      else if (!pr && *g.last_active() >= lo)
        right = {*g.last_active(), ExtendedCoord::pos_inf()};
    }
    if (!right || left->second > right->first) return std::nullopt;

    for (std::size_t c = 0; c < k; ++c)
      if (totals[c] - colors.count(c, left->second, right->first + 1) < 1) return std::nullopt;
    return make_witness(left->first, right->second, b, t, w);
  };

  // minimal rainbow intervals, left to right
  std::size_t a = *lo_l;
  for (;;) {
    std::size_t completion = 0;
    for (std::size_t c = 0; c < k; ++c) {
      const auto s = colors.successor(c, a);
      if (!s) return {};
      completion = std::max(completion, *s);
    }
    const std::size_t b1 = std::max(completion, *r_first);
    if (b1 > *r_last) return {};
    std::size_t latest = b1;
    for (std::size_t c = 0; c < k; ++c) latest = std::min(latest, *colors.predecessor(c, b1));
    const std::size_t a1 = std::min(latest, *hi_l);
    if (auto wit = try_interval(a1, b1)) return {true, wit};
    if (a1 >= *hi_l) return {};
    a = *g.next_active(a1 + 1);
  }
}

std::vector<MinimalRainbowInterval> minimal_rainbow_intervals(std::span<const ColoredPoint> slab,
                                                              int k, std::size_t l_first,
                                                              std::size_t l_last,
                                                              std::size_t r_first,
                                                              std::size_t r_last) {
  const std::size_t n = slab.size();
  const auto kk = static_cast<std::size_t>(k);
  std::vector<MinimalRainbowInterval> out;
  if (n == 0 || l_first > l_last || r_first > r_last || l_last >= n || r_last >= n) return out;
  auto color = [&](std::size_t q) { return static_cast<std::size_t>(slab[q].color.value - 1); };
  // next_of[q * k + c]: first index >= q of color c (n if none); prev_of likewise
  std::vector<std::size_t> next_of((n + 1) * kk, n), prev_of((n + 1) * kk, n);
  for (std::size_t q = n; q-- > 0;) {
    std::copy_n(next_of.begin() + static_cast<std::ptrdiff_t>((q + 1) * kk), kk,
                next_of.begin() + static_cast<std::ptrdiff_t>(q * kk));
    next_of[q * kk + color(q)] = q;
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (q > 0)
      std::copy_n(prev_of.begin() + static_cast<std::ptrdiff_t>((q - 1) * kk), kk,
                  prev_of.begin() + static_cast<std::ptrdiff_t>(q * kk));
    prev_of[q * kk + color(q)] = q;
  }

  std::size_t a = l_first;
  for (;;) {
    std::size_t completion = 0;
    for (std::size_t c = 0; c < kk; ++c) completion = std::max(completion, next_of[a * kk + c]);
    if (completion >= n) break;
    const std::size_t b = std::max(completion, r_first);
    if (b > r_last) break;
    std::size_t latest = b;
    for (std::size_t c = 0; c < kk; ++c) latest = std::min(latest, prev_of[b * kk + c]);
    const std::size_t a1 = std::min(latest, l_last);
    MinimalRainbowInterval mri{a1, b, std::vector<int>(kk, 0)};
    for (std::size_t q = a1; q <= b; ++q) ++mri.color_counter[color(q)];
    out.push_back(std::move(mri));
    if (a1 >= l_last) break;
    a = a1 + 1;
  }
  return out;
}

std::vector<WGap> relevant_w_gaps(std::span<const ColoredPoint> slab,
                                  std::span<const MinimalRainbowInterval> intervals,
                                  std::span<const WGap> lefts, std::span<const WGap> rights) {
  std::vector<WGap> kept_left, kept_right;
  auto same = [](const WGap& u, const WGap& v) {
    return u.left_x.value() == v.left_x.value() && u.right_x.value() == v.right_x.value();
  };
  auto keep = [&](std::vector<WGap>& into, const WGap& g) {
    for (const auto& h : into)
      if (same(h, g)) return;
    into.push_back(g);
  };
  for (const auto& iv : intervals) {
    const double xa = slab[iv.a].x, xb = slab[iv.b].x;
    const WGap* best = nullptr;
    for (const auto& g : lefts)
      if (g.right_x.value() <= xa && (!best || g.right_x.value() > best->right_x.value())) best = &g;
    if (best) keep(kept_left, *best);
    best = nullptr;
    for (const auto& g : rights)
      if (g.left_x.value() >= xb && (!best || g.left_x.value() < best->left_x.value())) best = &g;
    if (best) keep(kept_right, *best);
  }
  kept_left.insert(kept_left.end(), kept_right.begin(), kept_right.end());
  return kept_left;
}

namespace {

// Two-pointer over the bottom rank j and the candidate widths
// y_i - y_m, both only increasing.
template <class Decide>
std::optional<RectAnnulus> anchored_loop(const RectFrame& f, std::size_t i, Decide&& decide) {
  const std::size_t n = f.size();
  std::optional<RectAnnulus> best;
  std::size_t m = i + 1;
  for (std::size_t jj = i + 2; jj <= n && m < n; ++jj) {
    const std::optional<std::size_t> j = jj < n ? std::optional<std::size_t>(jj) : std::nullopt;
    while (m < n) {
      const double w = f.at(i).y - f.at(m).y;
      if (!(w > 0.0)) {
        ++m;
        continue;
      }
      DecisionOutcome out = decide(j, w);
      if (!out.feasible) break;
      best = out.witness;
      ++m;
    }
  }
  return best;
}

// top, bottom, right, left anchored frames
constexpr AxisMap kAnchors[] = {
    AxisMap{false, false, false},
    AxisMap{false, false, true},
    AxisMap{true, false, false},
    AxisMap{true, false, true},
};

Box unmap_box(const AxisMap& m, const Box& box) {
  const ColoredPoint lo = m.invert(ColoredPoint{box.left, box.bottom, {}});
  const ColoredPoint hi = m.invert(ColoredPoint{box.right, box.top, {}});
  return Box{std::min(lo.x, hi.x), std::max(lo.x, hi.x), std::min(lo.y, hi.y),
             std::max(lo.y, hi.y)};
}

bool better(const RectAnnulus& a, const std::optional<RectAnnulus>& best) {
  if (!best) return true;
  const double wa = a.width(), wb = best->width();
  if (wa != wb) return wa > wb;
  if (a.outer.left.value() != best->outer.left.value())
    return a.outer.left.value() < best->outer.left.value();
  return a.outer.bottom.value() < best->outer.bottom.value();
}

}  // namespace

std::optional<RectAnnulus> max_anchored_rbra_for_top_point(const RectFrame& frame, std::size_t i,
                                                           bool fast) {
  if (i >= frame.size()) throw std::invalid_argument("rank i out of range");
  if (fast && frame.general_position()) {
    SlabIndex slab(frame);
    slab.reset(i);
    return anchored_loop(frame, i, [&](std::optional<std::size_t> j, double w) {
      slab.extend_to(j);
      return dp_decision_fast(slab, i, j, w);
    });
  }
  SlowDecider d(frame);
  return anchored_loop(frame, i,
                       [&](std::optional<std::size_t> j, double w) { return d.decide(i, j, w); });
}

std::optional<RectAnnulus> max_rbra(const PointSet& ps, bool fast, unsigned threads) {
  std::vector<PointSet> mapped;
  mapped.reserve(std::size(kAnchors));
  for (const auto& m : kAnchors) mapped.push_back(m.apply(ps));
  std::vector<RectFrame> frames;
  frames.reserve(mapped.size());
  for (const auto& p : mapped) frames.emplace_back(p);

  const std::size_t n = ps.size();
  const std::size_t tasks = frames.size() * n;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks)));
  std::vector<std::optional<RectAnnulus>> partial(threads);

  auto work = [&](unsigned tid) {
    for (std::size_t a = 0; a < frames.size(); ++a) {
      const RectFrame& f = frames[a];
      const bool use_fast = fast && f.general_position();
      std::optional<SlabIndex> slab;
      std::optional<SlowDecider> slow;
      if (use_fast)
        slab.emplace(f);
      else
        slow.emplace(f);
      for (std::size_t i = 0; i < n; ++i) {
        if ((a * n + i) % threads != tid) continue;
        std::optional<RectAnnulus> found;
        if (use_fast) {
          slab->reset(i);
          found = anchored_loop(f, i, [&](std::optional<std::size_t> j, double w) {
            slab->extend_to(j);
            return dp_decision_fast(*slab, i, j, w);
          });
        } else {
          found = anchored_loop(
              f, i, [&](std::optional<std::size_t> j, double w) { return slow->decide(i, j, w); });
        }
        if (!found) continue;
        RectAnnulus back{unmap_box(kAnchors[a], found->outer), unmap_box(kAnchors[a], found->inner)};
        if (better(back, partial[tid])) partial[tid] = back;
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
  std::optional<RectAnnulus> best;
  for (auto& p : partial)
    if (p && better(*p, best)) best = p;
  return best;
}

}  // namespace rba
