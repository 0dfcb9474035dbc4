#include <gtest/gtest.h>

#include <random>

#include "rba/cli.hpp"
#include "rba/oracle.hpp"
#include "rba/rect.hpp"

using namespace rba;

namespace {

ColoredPoint pt(double x, double y, int c) { return {x, y, ColorId{c}}; }

PointSet distinct_set(std::mt19937_64& rng, std::size_t n, int k) {
  return PointSet(cli::generate(n, k, cli::Distribution::Uniform, rng()));
}

// top (0,10), rainbow core at y = 5, bottom (0,0)
PointSet frame_and_core() {
  return PointSet({pt(0, 10, 1), pt(0.2, 5, 1), pt(0.5, 5.1, 2), pt(0.1, 0, 2)});
}

std::size_t rank_of(const RectFrame& f, double y) {
  for (std::size_t r = 0; r < f.size(); ++r)
    if (f.at(r).y == y) return r;
  return f.size();
}

}  // namespace

TEST(DpDecision, RejectsShortSlab) {
  const PointSet ps = frame_and_core();
  const RectFrame f(ps);
  EXPECT_FALSE(dp_decision(f, 0, 3, 6.0).feasible);
  SlabIndex slab(f);
  slab.reset(0);
  slab.extend_to(3);
  EXPECT_FALSE(dp_decision_fast(slab, 0, 3, 6.0).feasible);
}

TEST(DpDecision, NestedRainbowIsFeasible) {
  const PointSet ps = frame_and_core();
  const RectFrame f(ps);
  for (double w : {1.0, 2.5, 4.0}) {
    const auto d = dp_decision(f, 0, 3, w);
    ASSERT_TRUE(d.feasible) << w;
    ASSERT_TRUE(d.witness);
    EXPECT_TRUE(validate_solution(*d.witness, ps));
    for (double side : {d.witness->top_width(), d.witness->bottom_width(), d.witness->left_width(),
                        d.witness->right_width()})
      if (std::isfinite(side)) EXPECT_DOUBLE_EQ(side, w);
  }
  EXPECT_FALSE(dp_decision(f, 0, 3, 5.05).feasible);
}

TEST(DpDecision, NoLeftGapIsInfeasible) {
  std::vector<ColoredPoint> pts = {pt(5, 10, 1), pt(2, 9.5, 1), pt(6, 0, 2), pt(5.5, 5, 1), pt(5.6, 5.05, 2)};
  const double ys[] = {3, 7, 3.3, 7.3, 3.6};
  int c = 0;
  for (double x : {2.5, 3.2, 3.9, 4.6, 5.3}) {
    pts.push_back(pt(x, ys[c], c % 2 + 1));
    ++c;
  }
  const PointSet ps(pts);
  const RectFrame f(ps);
  const std::size_t i = rank_of(f, 10), j = rank_of(f, 0);
  EXPECT_FALSE(dp_decision(f, i, j, 1.0).feasible);
  SlabIndex slab(f);
  slab.reset(i);
  slab.extend_to(j);
  EXPECT_FALSE(dp_decision_fast(slab, i, j, 1.0).feasible);
}

TEST(DpDecision, PreconditionsThrow) {
  const PointSet ps = frame_and_core();
  const RectFrame f(ps);
  EXPECT_THROW(dp_decision(f, 0, 1, 1.0), std::invalid_argument);
  EXPECT_THROW(dp_decision(f, 0, 4, 1.0), std::invalid_argument);
  EXPECT_THROW(dp_decision(f, 0, 3, 0.0), std::invalid_argument);
}

TEST(DpDecision, MonotoneAndFastMatchesSlow) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const PointSet ps = distinct_set(rng, 6 + t % 15, 1 + t % 3);
    const RectFrame f(ps);
    SlabIndex slab(f);
    const std::size_t n = ps.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      slab.reset(i);
      for (std::size_t jj = i + 2; jj <= n; ++jj) {
        const std::optional<std::size_t> j = jj == n ? std::nullopt : std::optional(jj);
        slab.extend_to(j);
        bool prev = true;
        for (double w = 1.0; w < 60.0; w += 3.7) {
          const auto slow = dp_decision(f, i, j, w);
          const auto fast = dp_decision_fast(slab, i, j, w);
          ASSERT_EQ(slow.feasible, fast.feasible);
          EXPECT_TRUE(prev || !slow.feasible);
          prev = slow.feasible;
          if (fast.feasible) EXPECT_TRUE(validate_solution(*fast.witness, ps));
        }
      }
    }
  }
}

TEST(MinimalRainbowIntervals, SingleColor) {
  std::vector<ColoredPoint> slab;
  for (int q = 0; q < 6; ++q) slab.push_back(pt(q, 0, 1));
  const auto iv = minimal_rainbow_intervals(slab, 1, 0, 2, 3, 5);
  ASSERT_EQ(iv.size(), 1u);
  EXPECT_EQ(iv[0].a, 2u);
  EXPECT_EQ(iv[0].b, 3u);
  EXPECT_EQ(iv[0].color_counter, std::vector<int>{2});
}

TEST(MinimalRainbowIntervals, MissingColor) {
  std::vector<ColoredPoint> slab;
  for (int q = 0; q < 6; ++q) slab.push_back(pt(q, 0, 1 + q % 2));
  EXPECT_TRUE(minimal_rainbow_intervals(slab, 3, 0, 2, 3, 5).empty());
}

TEST(MinimalRainbowIntervals, ThreeOverlapping) {
  // colors 1 2 3 3 1 2 over x = 0..5, L = [0, 2], R = [3, 5]
  const int colors[] = {1, 2, 3, 3, 1, 2};
  std::vector<ColoredPoint> slab;
  for (int q = 0; q < 6; ++q) slab.push_back(pt(q, 0, colors[q]));
  const auto iv = minimal_rainbow_intervals(slab, 3, 0, 2, 3, 5);
  ASSERT_EQ(iv.size(), 3u);
  for (std::size_t t = 0; t < 3; ++t) {
    EXPECT_EQ(iv[t].a, t);
    EXPECT_EQ(iv[t].b, t + 3);
  }
  // consecutive intervals: the next right endpoint repeats the previous left color
  for (std::size_t t = 0; t + 1 < iv.size(); ++t) EXPECT_EQ(slab[iv[t + 1].b].color, slab[iv[t].a].color);
}

TEST(RelevantWGaps, KeepsRightmostLeftGap) {
  std::vector<ColoredPoint> slab;
  for (int q = 0; q < 4; ++q) slab.push_back(pt(10 + q, 0, 1 + q % 2));
  const auto iv = minimal_rainbow_intervals(slab, 2, 0, 1, 2, 3);
  ASSERT_FALSE(iv.empty());
  const std::vector<WGap> lefts = {{0.0, 2.0}, {3.0, 5.0}, {6.0, 9.0}};
  const auto g = relevant_w_gaps(slab, std::span(iv).first(1), lefts, {});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_DOUBLE_EQ(g[0].left_x, 6.0);
  EXPECT_TRUE(relevant_w_gaps(slab, iv, {}, {}).empty());
}

TEST(ColorRangeTrees, MatchesNaive) {
  std::mt19937_64 rng(32);
  const std::size_t n = 50, k = 4;
  std::vector<std::size_t> colors(n);
  for (auto& c : colors) c = rng() % k;
  ColorRangeTrees trees(colors, k);
  std::vector<char> active(n, 0);
  for (int op = 0; op < 2000; ++op) {
    const std::size_t s = rng() % n;
    if (op % 2 == 0 && !active[s]) {
      trees.insert(s);
      active[s] = 1;
      continue;
    }
    const std::size_t c = rng() % k;
    std::size_t lo = rng() % (n + 1), hi = rng() % (n + 1);
    if (lo > hi) std::swap(lo, hi);
    int expect = 0;
    for (std::size_t q = lo; q < hi; ++q) expect += active[q] && colors[q] == c;
    EXPECT_EQ(trees.count(c, lo, hi), expect);
    std::optional<std::size_t> succ, pred;
    for (std::size_t q = s; q < n && !succ; ++q)
      if (active[q] && colors[q] == c) succ = q;
    for (std::size_t q = s + 1; q-- > 0 && !pred;)
      if (active[q] && colors[q] == c) pred = q;
    EXPECT_EQ(trees.successor(c, s), succ);
    EXPECT_EQ(trees.predecessor(c, s), pred);
  }
}

TEST(GapPointTree, MatchesNaive) {
  std::mt19937_64 rng(33);
  std::vector<double> xs;
  double x = 0;
  for (int q = 0; q < 64; ++q) xs.push_back(x += 1 + static_cast<double>(rng() % 6));
  GapPointTree g(xs);
  std::vector<char> active(xs.size(), 0);
  auto gap_of = [&](std::size_t s) {
    for (std::size_t q = s + 1; q < xs.size(); ++q)
      if (active[q]) return xs[q] - xs[s];
    return -kInf;
  };
  for (int op = 0; op < 3000; ++op) {
    const std::size_t s = rng() % xs.size();
    if (op % 3 == 0) {
      if (!active[s]) {
        g.insert(s);
        active[s] = 1;
      }
      continue;
    }
    std::size_t lo = rng() % (xs.size() + 1), hi = rng() % (xs.size() + 1);
    if (lo > hi) std::swap(lo, hi);
    const double w = 1 + static_cast<double>(rng() % 12);
    std::optional<std::size_t> first, last, next, prev;
    for (std::size_t q = lo; q < hi; ++q)
      if (active[q] && gap_of(q) >= w) {
        if (!first) first = q;
        last = q;
      }
    for (std::size_t q = s; q < xs.size() && !next; ++q)
      if (active[q]) next = q;
    for (std::size_t q = s + 1; q-- > 0 && !prev;)
      if (active[q]) prev = q;
    EXPECT_EQ(g.leftmost_at_least(lo, hi, w), first);
    EXPECT_EQ(g.rightmost_at_least(lo, hi, w), last);
    EXPECT_EQ(g.next_active(s), next);
    EXPECT_EQ(g.prev_active(s), prev);
    if (active[s]) EXPECT_EQ(g.gap(s), gap_of(s));
  }
}

TEST(MaxAnchored, LowestPointHasNoSlab) {
  const PointSet ps = frame_and_core();
  const RectFrame f(ps);
  EXPECT_FALSE(max_anchored_rbra_for_top_point(f, ps.size() - 1));
  EXPECT_FALSE(max_anchored_rbra_for_top_point(f, ps.size() - 1, true));
}

TEST(MaxAnchored, NestedRainbowBestWidth) {
  const PointSet ps = frame_and_core();
  const RectFrame f(ps);
  const auto a = max_anchored_rbra_for_top_point(f, 0);
  ASSERT_TRUE(a);
  EXPECT_TRUE(validate_solution(*a, ps));
  EXPECT_DOUBLE_EQ(a->top_width(), a->width());
  EXPECT_EQ(a->outer.top.value(), 10.0);
  EXPECT_LE(a->width(), oracle::oracle_rbra(ps)->width());
}

TEST(MaxRbra, InfiniteSideOptimum) {
  const PointSet ps({pt(0, 0, 1), pt(1, 1, 2), pt(0.5, 3, 1), pt(50, 0, 1), pt(51, 1, 2), pt(50.5, 3, 2)});
  const auto r = max_rbra(ps), o = oracle::oracle_rbra(ps);
  ASSERT_TRUE(r);
  ASSERT_TRUE(o);
  EXPECT_DOUBLE_EQ(r->width(), 49.0);
  EXPECT_DOUBLE_EQ(o->width(), 49.0);
  EXPECT_TRUE(!r->outer.left.finite() || !r->outer.right.finite() || !r->outer.top.finite() ||
              !r->outer.bottom.finite());
  EXPECT_TRUE(validate_solution(*r, ps));
}

TEST(MaxRbra, MatchesOracleOnBothPaths) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 60; ++t) {
    const PointSet ps = distinct_set(rng, 4 + t % 9, 1 + t % 3);
    const auto o = oracle::oracle_rbra(ps);
    for (bool fast : {false, true}) {
      const auto r = max_rbra(ps, fast);
      ASSERT_EQ(r.has_value(), o.has_value());
      if (!r) continue;
      EXPECT_EQ(r->width(), o->width());
      EXPECT_TRUE(r->uniform());
      EXPECT_TRUE(validate_solution(*r, ps));
    }
  }
}

TEST(MaxRbra, RepeatedCoordinatesFallBackToSlow) {
  std::mt19937_64 rng(35);
  std::uniform_int_distribution<int> coord(0, 8);
  for (int t = 0; t < 60; ++t) {
    std::vector<ColoredPoint> pts;
    for (int q = 0; q < 10; ++q) pts.push_back(pt(coord(rng), coord(rng), q % 2 + 1));
    const PointSet ps(pts);
    const auto a = max_rbra(ps, true), b = max_rbra(ps, false), o = oracle::oracle_rbra(ps);
    ASSERT_EQ(a.has_value(), o.has_value());
    ASSERT_EQ(b.has_value(), o.has_value());
    if (a) {
      EXPECT_EQ(a->width(), o->width());
      EXPECT_EQ(b->width(), o->width());
    }
  }
}

TEST(MaxRbra, DeterministicAcrossThreads) {
  std::mt19937_64 rng(36);
  const PointSet ps = distinct_set(rng, 40, 3);
  const auto a = max_rbra(ps, true, 1), b = max_rbra(ps, true, 5);
  ASSERT_EQ(a.has_value(), b.has_value());
  if (a) {
    EXPECT_EQ(a->width(), b->width());
    EXPECT_EQ(a->outer.left.value(), b->outer.left.value());
    EXPECT_EQ(a->outer.bottom.value(), b->outer.bottom.value());
  }
}
