#pragma once

#include <cstddef>
#include <optional>

#include "rba/core.hpp"
#include "rba/lcorridor.hpp"
#include "rba/strip.hpp"

namespace rba {

/// Possible outer-square centers when p_lo lies on the bottom side and p_hi on
/// the top side: the horizontal segment [a, b] at mid height.
struct CenterSegment {
  double a = 0.0;
  double b = 0.0;
  double y = 0.0;
  double radius = 0.0;
};

/// Requires y(p_lo) < y(p_hi); nullopt when the x-separation exceeds the side.
std::optional<CenterSegment> c3_center_segment(const ColoredPoint& p_lo, const ColoredPoint& p_hi);

/// Widest valid annulus whose outer square has p_lo on its bottom side and
/// p_hi on its top side. The inner radius at a center c is the largest L-inf
/// distance to the points strictly inside S(c); the piecewise-linear width
/// is evaluated exactly at its breakpoints.
std::optional<SquareAnnulus> best_annulus_on_segment(const PointSet& ps, std::size_t lo_index,
                                                     std::size_t hi_index);

/// Best annulus with two opposite outer sides holding points (top/bottom,
/// and left/right via the transposed point set).
std::optional<SquareAnnulus> max_rbsa_c3(const PointSet& ps, unsigned threads = 1);

enum class SquareConfig { C1, C2, C3 };

struct SquareSolution {
  SquareAnnulus annulus;
  SquareConfig config;
};

SquareAnnulus as_square(const Strip& s);
SquareAnnulus as_square(const LCorridor& l);

/// Widest square annulus over all three configurations.
std::optional<SquareSolution> max_rbsa(const PointSet& ps, unsigned threads = 1);

}  // namespace rba
