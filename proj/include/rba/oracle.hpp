#pragma once

#include <optional>

#include "rba/circle.hpp"
#include "rba/core.hpp"

// Brute-force references. They depend only on the core types.
namespace rba::oracle {

/// Every pair of coordinates, rainbow recounted per candidate; ties keep the
/// smallest lower line.
std::optional<Strip> oracle_rbes(const PointSet& ps, StripOrientation orientation);

/// Outer corners on the grid of point coordinates (with the infinite
/// sentinels), all four orientations, width = smallest clearance of the inner
/// points.
std::optional<LCorridor> oracle_rblc(const PointSet& ps);

/// Strips, grid corridors and, per pair of opposite-side points, every center
/// abscissa formed from coordinate combinations.
std::optional<SquareAnnulus> oracle_rbsa(const PointSet& ps);

/// Outer rectangles from point coordinates and infinite sentinels, inner box
/// uniformized from the bounding box of the enclosed points.
std::optional<RectAnnulus> oracle_rbra(const PointSet& ps);

/// Best sampled width over a resolution x resolution grid of centers spanning
/// the bounding box; 0 when no sample is feasible.
double oracle_rbca(const PointSet& ps, int resolution = 200);

/// Best sampled width over `samples` evenly spaced centers of the line window.
double oracle_rbca_on_line(const PointSet& ps, const Line& line, int samples = 10000);

/// Exhaustive candidate enumeration for small inputs: all bisector
/// crossings, bisector and point-line crossings, the input points, and the
/// bounding-box boundary critical points, each evaluated naively.
std::optional<CircularAnnulus> oracle_rbca_exhaustive(const PointSet& ps);

}  // namespace rba::oracle
