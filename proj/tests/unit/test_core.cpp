#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "rba/core.hpp"

using namespace rba;

namespace {

ColoredPoint pt(double x, double y, int c) { return {x, y, ColorId{c}}; }

PointSet symmetric() {
  return PointSet({pt(-1, 0, 1), pt(1, 0, 2), pt(0, 3, 1), pt(0, -3, 2)});
}

}  // namespace

TEST(IsRainbow, Examples) {
  EXPECT_TRUE(is_rainbow(std::vector<int>{1, 1}));
  EXPECT_FALSE(is_rainbow(std::vector<int>{1, 0}));
  EXPECT_TRUE(is_rainbow(std::vector<int>{5, 2, 1}));
}

TEST(PointSet, InfersColorsAndSorts) {
  const PointSet ps({pt(3, 1, 2), pt(1, 2, 1), pt(2, 0, 2), pt(0, 5, 1)});
  EXPECT_EQ(ps.k(), 2);
  EXPECT_EQ(ps.color_count()[0], 2);
  EXPECT_EQ(ps.by_x()[0], 3u);
  EXPECT_EQ(ps.by_y()[0], 2u);
}

TEST(PointSet, RejectsBadInput) {
  EXPECT_THROW(PointSet({pt(0, 0, 1), pt(1, 1, 2), pt(2, 2, 2)}), std::invalid_argument);
  EXPECT_THROW(PointSet({pt(0, 0, 0), pt(1, 1, 0)}), std::invalid_argument);
  EXPECT_THROW(PointSet({pt(kInf, 0, 1), pt(1, 1, 1)}), std::invalid_argument);
  EXPECT_THROW(PointSet({pt(0, 0, 1), pt(1, 1, 1), pt(2, 2, 3), pt(3, 3, 3)}), std::invalid_argument);
}

TEST(Classify, CircleBoundaries) {
  const Annulus a = CircularAnnulus{0, 0, 1, 3};
  EXPECT_EQ(classify(pt(1, 0, 1), a), Region::InsideRegion);
  EXPECT_EQ(classify(pt(2, 0, 1), a), Region::AnnulusInterior);
  EXPECT_EQ(classify(pt(3, 0, 1), a), Region::OutsideRegion);
}

TEST(Classify, BoxShapes) {
  const Annulus strip = Strip{StripOrientation::Vertical, 1, 5};
  EXPECT_EQ(classify(pt(1, 7, 1), strip), Region::InsideRegion);
  EXPECT_EQ(classify(pt(3, 7, 1), strip), Region::AnnulusInterior);
  EXPECT_EQ(classify(pt(5, -7, 1), strip), Region::OutsideRegion);
  const Annulus corridor = LCorridor{CorridorOrientation::DownRight, 0.0, 10.0, 2.0};
  EXPECT_EQ(classify(pt(2, 8, 1), corridor), Region::InsideRegion);
  EXPECT_EQ(classify(pt(1, 3, 1), corridor), Region::AnnulusInterior);
  EXPECT_EQ(classify(pt(5, 9, 1), corridor), Region::AnnulusInterior);
  EXPECT_EQ(classify(pt(-1, 3, 1), corridor), Region::OutsideRegion);
  const Annulus rect = RectAnnulus{Box{0, 10, 0, 10}, Box{2, 8, 2, 8}};
  EXPECT_EQ(classify(pt(8, 8, 1), rect), Region::InsideRegion);
  EXPECT_EQ(classify(pt(9, 5, 1), rect), Region::AnnulusInterior);
  EXPECT_EQ(classify(pt(10, 5, 1), rect), Region::OutsideRegion);
}

TEST(Classify, PartitionsEveryPoint) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10, 10);
  const Annulus a = RectAnnulus{Box{-5, 5, -3, 4}, Box{-4, 4, -2, 3}};
  for (int t = 0; t < 1000; ++t) {
    const auto r = classify(pt(u(rng), u(rng), 1), a);
    EXPECT_TRUE(r == Region::InsideRegion || r == Region::AnnulusInterior || r == Region::OutsideRegion);
  }
}

TEST(ValidateSolution, Examples) {
  const PointSet ps = symmetric();
  EXPECT_TRUE(validate_solution(CircularAnnulus{0, 0, 1, 3}, ps));
  EXPECT_FALSE(validate_solution(CircularAnnulus{0, 0, 0.5, 3}, ps));
  const PointSet same_inside({pt(-1, 0, 1), pt(1, 0, 1), pt(0, 3, 2), pt(0, -3, 2)});
  EXPECT_FALSE(validate_solution(CircularAnnulus{0, 0, 1, 3}, same_inside));
}

TEST(ValidateSolution, RejectsZeroWidth) {
  EXPECT_FALSE(validate_solution(CircularAnnulus{0, 0, 2, 2}, symmetric()));
  EXPECT_FALSE(validate_solution(Strip{StripOrientation::Vertical, 0, 0}, symmetric()));
}

TEST(ValidateSolution, CountsRegions) {
  const RegionCounts rc = count_regions(CircularAnnulus{0, 0, 1, 3}, symmetric());
  EXPECT_EQ(rc.inside, (std::vector<int>{1, 1}));
  EXPECT_EQ(rc.outside, (std::vector<int>{1, 1}));
  EXPECT_EQ(rc.interior, 0u);
}

TEST(Box, OffsetComposes) {
  const Box b{0, 10, -2, 8};
  const Box once = b.offset(1.5).offset(2.0), twice = b.offset(3.5);
  EXPECT_DOUBLE_EQ(once.left, twice.left);
  EXPECT_DOUBLE_EQ(once.right, twice.right);
  EXPECT_DOUBLE_EQ(once.bottom, twice.bottom);
  EXPECT_DOUBLE_EQ(once.top, twice.top);
  const Box open;
  EXPECT_FALSE(open.offset(1.0).left.finite());
}

TEST(SquareAnnulus, Accessors) {
  const SquareAnnulus s{Box{0, 4, 2, 6}, 1};
  EXPECT_DOUBLE_EQ(s.center_x(), 2);
  EXPECT_DOUBLE_EQ(s.center_y(), 4);
  EXPECT_DOUBLE_EQ(s.radius(), 2);
  EXPECT_EQ(s.infinite_sides(), kSideNone);
  EXPECT_DOUBLE_EQ(s.inner().left, 1);
}

TEST(RectAnnulus, SideWidths) {
  const RectAnnulus r{Box{-kInf, 10, 0, 10}, Box{-kInf, 8, 1, 7}};
  EXPECT_TRUE(std::isinf(r.left_width()));
  EXPECT_DOUBLE_EQ(r.right_width(), 2);
  EXPECT_DOUBLE_EQ(r.width(), 1);
  EXPECT_FALSE(r.uniform());
}

TEST(AxisMap, InvertsApply) {
  for (int m = 0; m < 8; ++m) {
    const AxisMap map{(m & 1) != 0, (m & 2) != 0, (m & 4) != 0};
    const ColoredPoint p = pt(3, -7, 2);
    const ColoredPoint back = map.invert(map.apply(p));
    EXPECT_DOUBLE_EQ(back.x, p.x);
    EXPECT_DOUBLE_EQ(back.y, p.y);
  }
  const ColoredPoint s = AxisMap{true, true, false}.apply(pt(1, 2, 1));
  EXPECT_DOUBLE_EQ(s.x, -2);
  EXPECT_DOUBLE_EQ(s.y, 1);
}

TEST(Epsilon, Override) {
  const double old = epsilon();
  set_epsilon(0.5);
  EXPECT_EQ(classify(pt(1.4, 0, 1), CircularAnnulus{0, 0, 1, 3}), Region::InsideRegion);
  set_epsilon(old);
  EXPECT_EQ(classify(pt(1.4, 0, 1), CircularAnnulus{0, 0, 1, 3}), Region::AnnulusInterior);
}

TEST(Shape, NamesAndWidths) {
  EXPECT_EQ(shape_name(Strip{}), "strip");
  EXPECT_EQ(shape_name(CircularAnnulus{}), "circle");
  EXPECT_DOUBLE_EQ(width_of(LCorridor{CorridorOrientation::UpLeft, 0.0, 0.0, 2.5}), 2.5);
}
