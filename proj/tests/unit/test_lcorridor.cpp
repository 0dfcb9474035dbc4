#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rba/lcorridor.hpp"
#include "rba/oracle.hpp"

using namespace rba;

namespace {

ColoredPoint pt(double x, double y, int c) { return {x, y, ColorId{c}}; }

PointSet random_set(std::mt19937_64& rng, int n, int k, int range) {
  std::uniform_int_distribution<int> coord(0, range);
  std::vector<ColoredPoint> pts;
  for (int q = 0; q < std::max(n, 2 * k); ++q) pts.push_back(pt(coord(rng), coord(rng), q % k + 1));
  return PointSet(pts);
}

// Largest X with {x >= X, y <= Y} rainbow, or -inf.
double naive_lower(const PointSet& ps, double y) {
  double best = kInf;
  for (int c = 1; c <= ps.k(); ++c) {
    double m = -kInf;
    for (const auto& p : ps.points())
      if (p.color.value == c && p.y <= y) m = std::max(m, p.x);
    best = std::min(best, m);
  }
  return best;
}

// Smallest X with {y >= Y} plus {x <= X} rainbow; -inf when the upper part
// alone is rainbow.
double naive_upper(const PointSet& ps, double y) {
  double need = -kInf;
  for (int c = 1; c <= ps.k(); ++c) {
    bool above = false;
    double m = kInf;
    for (const auto& p : ps.points()) {
      if (p.color.value != c) continue;
      if (p.y >= y) above = true;
      m = std::min(m, p.x);
    }
    if (!above) need = std::max(need, m);
  }
  return need;
}

}  // namespace

TEST(Staircase, SingleColor) {
  const PointSet ps({pt(1, 1, 1), pt(2, 2, 1)});
  const auto [lower, upper] = build_staircases(ps);
  EXPECT_DOUBLE_EQ(lower.x_at(1.0), 1.0);
  EXPECT_DOUBLE_EQ(lower.x_at(5.0), 2.0);
  EXPECT_FALSE(lower.x_at(0.5).finite());
  EXPECT_FALSE(upper.x_at(1.5).finite());
}

TEST(Staircase, TwoColorExample) {
  const PointSet ps({pt(1, 1, 1), pt(2, 2, 2), pt(3, 3, 1), pt(4, 4, 2)});
  const auto [lower, upper] = build_staircases(ps);
  ASSERT_GE(lower.corners.size(), 2u);
  EXPECT_DOUBLE_EQ(lower.corners[0].x, 1);
  EXPECT_DOUBLE_EQ(lower.corners[0].y, 2);
  EXPECT_DOUBLE_EQ(lower.corners[1].x, 2);
  EXPECT_DOUBLE_EQ(lower.corners[1].y, 3);
  EXPECT_FALSE(lower.x_at(1.5).finite());
}

TEST(Staircase, MatchesNaiveAndIsMonotone) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const PointSet ps = random_set(rng, 6 + t % 15, 1 + t % 4, 30);
    const auto [lower, upper] = build_staircases(ps);
    for (const auto* s : {&lower, &upper})
      for (std::size_t c = 1; c < s->corners.size(); ++c) {
        EXPECT_LT(s->corners[c - 1].x, s->corners[c].x);
        EXPECT_LT(s->corners[c - 1].y, s->corners[c].y);
      }
    for (double y = -1.0; y <= 31.0; y += 0.5) {
      EXPECT_EQ(lower.x_at(y).value(), naive_lower(ps, y)) << "y=" << y;
      EXPECT_EQ(upper.x_at(y).value(), naive_upper(ps, y)) << "y=" << y;
    }
  }
}

TEST(GapTree, Examples) {
  GapTree g({0, 2, 7, 9});
  for (std::size_t s = 0; s < 4; ++s) g.insert(s);
  auto r = g.max_gap(0.0, 9.0);
  EXPECT_DOUBLE_EQ(r.gap, 5);
  EXPECT_DOUBLE_EQ(r.left, 2);
  r = g.max_gap(0.0, 5.0);
  EXPECT_DOUBLE_EQ(r.gap, 3);
  EXPECT_DOUBLE_EQ(r.left, 2);
  r = g.max_gap(3.0, 6.0);
  EXPECT_DOUBLE_EQ(r.gap, 3);
  EXPECT_DOUBLE_EQ(r.left, 3);
}

TEST(GapTree, MatchesNaive) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 20; ++round) {
    std::vector<double> xs;
    for (int q = 0; q < 60; ++q) xs.push_back(q * 3 + static_cast<int>(rng() % 3));
    std::sort(xs.begin(), xs.end());
    GapTree g(xs);
    std::set<double> active;
    std::uniform_real_distribution<double> u(-10.0, 200.0);
    for (int op = 0; op < 500; ++op) {
      if (rng() % 2) {
        const std::size_t s = rng() % xs.size();
        if (!active.contains(xs[s])) {
          g.insert(s);
          active.insert(xs[s]);
        }
        continue;
      }
      double lo = u(rng), hi = u(rng);
      if (rng() % 3 == 0) lo = xs[rng() % xs.size()];
      if (lo > hi) std::swap(lo, hi);
      std::vector<double> seq = {lo};
      for (double x : active)
        if (x >= lo && x <= hi) seq.push_back(x);
      seq.push_back(hi);
      double best = -1.0, left = 0.0;
      for (std::size_t q = 1; q < seq.size(); ++q)
        if (seq[q] - seq[q - 1] > best) {
          best = seq[q] - seq[q - 1];
          left = seq[q - 1];
        }
      const GapResult r = g.max_gap(lo, hi);
      EXPECT_DOUBLE_EQ(r.gap, best);
      EXPECT_DOUBLE_EQ(r.left, left);
    }
    EXPECT_EQ(g.active(), active.size());
  }
}

TEST(GapTree, InfiniteBounds) {
  GapTree g({1, 4});
  g.insert(0);
  g.insert(1);
  EXPECT_TRUE(std::isinf(g.max_gap(ExtendedCoord::neg_inf(), 4.0).gap));
}

TEST(MaxCoordTree, MatchesNaive) {
  std::mt19937_64 rng(13);
  const PointSet ps = random_set(rng, 40, 2, 1000);
  const MaxCoordTree tree(ps);
  for (int t = 0; t < 500; ++t) {
    std::size_t lo = rng() % 41, hi = rng() % 41;
    if (lo > hi) std::swap(lo, hi);
    const auto r = tree.argmax(lo, hi);
    if (lo == hi) {
      EXPECT_FALSE(r);
      continue;
    }
    double best = -kInf;
    for (std::size_t q = lo; q < hi; ++q) best = std::max(best, ps[ps.by_y()[q]].x);
    ASSERT_TRUE(r);
    EXPECT_DOUBLE_EQ(tree.x_at_rank(*r), best);
  }
}

TEST(CorridorSweep, BoundaryPointsExamples) {
  const PointSet ps({pt(0, 0, 1), pt(2, 1, 2), pt(7, 2, 1), pt(4, 1.5, 2), pt(1, 3, 1), pt(3, 5, 2)});
  const CorridorSweep sweep(ps);
  auto b = sweep.boundary_points(0.0, 2.0);
  ASSERT_TRUE(b.j);
  EXPECT_DOUBLE_EQ(sweep.y_at_rank(*b.j), 3.0);
  ASSERT_TRUE(b.k);
  EXPECT_DOUBLE_EQ(sweep.max_tree().x_at_rank(*b.k), 7.0);
  b = sweep.boundary_points(0.0, 10.0);
  EXPECT_FALSE(b.j);
}

TEST(CorridorSweep, RainbowRangeReadsStaircases) {
  const PointSet ps({pt(1, 1, 1), pt(2, 2, 2), pt(3, 3, 1), pt(4, 4, 2)});
  const CorridorSweep sweep(ps);
  const auto [lower, upper] = build_staircases(ps);
  for (double yi : {0.0, 1.0, 2.5, 3.0}) {
    const auto [xt, xb] = sweep.rainbow_range(yi, ExtendedCoord(yi + 1.0));
    EXPECT_EQ(xb.value(), lower.x_at(yi).value());
    EXPECT_EQ(xt.value(), upper.x_at(yi + 1.0).value());
  }
}

TEST(CorridorSweep, StepsAreMonotone) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const PointSet ps = random_set(rng, 20, 3, 100);
    CorridorSweep sweep(ps);
    std::vector<CorridorSweep::Step> trace;
    sweep.run(&trace);
    for (std::size_t q = 1; q < trace.size(); ++q) {
      EXPECT_LE(trace[q - 1].i_rank, trace[q].i_rank);
      EXPECT_LE(trace[q - 1].j_rank, trace[q].j_rank);
      EXPECT_LT(trace[q - 1].width, trace[q].width);
    }
  }
}

TEST(MaxRblc, WideLGap) {
  // inner cluster down-right of an outer L
  const PointSet ps({pt(0, 0, 1), pt(0, 10, 2), pt(5, 10, 1), pt(10, 10, 2), pt(7, 1, 1), pt(9, 3, 2),
                     pt(8, 2, 1), pt(10, 0, 2)});
  const auto l = max_rblc_all(ps);
  const auto o = oracle::oracle_rblc(ps);
  ASSERT_TRUE(l);
  ASSERT_TRUE(o);
  EXPECT_DOUBLE_EQ(l->width, o->width);
  EXPECT_TRUE(validate_solution(*l, ps));
}

TEST(MaxRblc, CollinearSetAgreesWithOracle) {
  const PointSet ps({pt(0, 0, 1), pt(1, 0, 2), pt(5, 0, 1), pt(6, 0, 2)});
  const auto l = max_rblc_all(ps);
  const auto o = oracle::oracle_rblc(ps);
  ASSERT_EQ(l.has_value(), o.has_value());
  if (l) EXPECT_DOUBLE_EQ(l->width, o->width);
}

TEST(MaxRblc, ReflectionKeepsWidth) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 100; ++t) {
    const PointSet ps = random_set(rng, 12, 2 + t % 3, 50);
    std::vector<ColoredPoint> mirrored;
    for (const auto& p : ps.points()) mirrored.push_back(pt(-p.x, p.y, p.color.value));
    const auto a = max_rblc_all(ps), b = max_rblc_all(PointSet(mirrored));
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) EXPECT_DOUBLE_EQ(a->width, b->width);
  }
}

TEST(MaxRblc, EachOrientationMatchesOracleAndValidates) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 150; ++t) {
    const PointSet ps = random_set(rng, 4 + t % 17, 1 + t % 4, 60);
    const auto a = max_rblc_all(ps), o = oracle::oracle_rblc(ps);
    ASSERT_EQ(a.has_value(), o.has_value());
    if (!a) continue;
    EXPECT_EQ(a->width, o->width);
    EXPECT_TRUE(validate_solution(*a, ps));
    for (auto orient : {CorridorOrientation::DownRight, CorridorOrientation::DownLeft,
                        CorridorOrientation::UpRight, CorridorOrientation::UpLeft})
      if (auto l = max_rblc(ps, orient)) {
        EXPECT_EQ(l->orientation, orient);
        EXPECT_TRUE(validate_solution(*l, ps));
        EXPECT_LE(l->width, a->width);
      }
  }
}
