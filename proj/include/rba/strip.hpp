#pragma once

#include <optional>

#include "rba/core.hpp"

namespace rba {

/// Widest empty axis-parallel strip whose two closed sides are both rainbow.
/// Linear scan over the presorted coordinate order with prefix coverage
/// counters. Ties keep the smallest `lo`. Returns nullopt when no gap between
/// distinct coordinates has rainbow sides on both ends.
std::optional<Strip> max_rbes(const PointSet& ps, StripOrientation orientation);

/// Better of the two orientations (vertical wins ties).
std::optional<Strip> max_rbes_any(const PointSet& ps);

}  // namespace rba
