#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rba/core.hpp"

namespace rba {

struct LiftedPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Vertical projection onto the paraboloid z = x^2 + y^2.
LiftedPoint lift(const ColoredPoint& p);

/// Non-vertical plane z = a*x + b*y + c.
struct Plane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double at(double x, double y) const { return a * x + b * y + c; }
};

/// Image of the circle with center (cx, cy) and radius rho: points strictly
/// inside the circle lift strictly below this plane.
Plane circle_plane(double cx, double cy, double rho);

struct CenterCandidate {
  enum class Kind { Cir22, Cir21, PointCenter, Boundary, LineConstrained };
  double x = 0.0;
  double y = 0.0;
  Kind kind = Kind::Cir22;
  /// Defining point indices; unused entries are npos.
  std::size_t p = npos, q = npos, r = npos, s = npos;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

std::string kind_name(CenterCandidate::Kind kind);

/// Intersections of the perpendicular bisectors of {p,q} and {r,s} over all
/// unordered pairs of distinct pairs; pairs sharing a point give
/// circumcenters. Parallel bisectors are skipped.
std::vector<CenterCandidate> cir22_candidates(const PointSet& ps);

/// bisector(p,q) meets line(p,r) and line(q,r), over all pairs {p,q} and r.
std::vector<CenterCandidate> cir21_candidates(const PointSet& ps);

/// Widest valid annulus centered at (cx, cy): consecutive distances d_t <
/// d_t+1 with both the closed inner disk and its complement rainbow.
std::optional<CircularAnnulus> best_annulus_at_center(const PointSet& ps, double cx, double cy);

struct CircleSolution {
  CircularAnnulus annulus;
  CenterCandidate::Kind provenance;
};

/// Best annulus over the Cir22 and Cir21 centers, the input points, and the
/// critical centers on the boundary of the bounding box.
std::optional<CircleSolution> max_rbca(const PointSet& ps, unsigned threads = 1);

/// a*x + b*y = c with (a, b) != (0, 0).
struct Line {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  /// Parses forms such as "y=0", "x+2y=3", "-0.5x + y = 1e-3".
  static Line parse(const std::string& text);
  double base_x() const;  // foot of the perpendicular from the origin
  double base_y() const;
  double dir_x() const;   // unit direction (-b, a) / |(a, b)|
  double dir_y() const;
};

/// Parameter window [lo, hi] along `line` (distance units from the base
/// point): the projections of the points widened by the bounding-box
/// diagonal on each side.
std::pair<double, double> line_window(const PointSet& ps, const Line& line);

/// Best annulus with center on `line`: bisector and point-pair line
/// crossings, reflected stationary points, and the window ends.
std::optional<CircularAnnulus> max_rbca_on_line(const PointSet& ps, const Line& line);

}  // namespace rba
