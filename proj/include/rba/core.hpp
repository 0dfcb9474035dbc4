#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace rba {

/// Absolute tolerance for boundary tests. Defaults to 1e-9, overridable through
/// the RBA_EPSILON environment variable (read once).
double epsilon();
void set_epsilon(double eps);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Color index in [1, k].
struct ColorId {
  int value = 1;
  constexpr auto operator<=>(const ColorId&) const = default;
};

struct ColoredPoint {
  double x = 0.0;
  double y = 0.0;
  ColorId color{};
};

/// A coordinate that may sit at +inf or -inf. IEEE infinities already order
/// correctly against every finite double, so the wrapper only adds intent.
class ExtendedCoord {
 public:
  constexpr ExtendedCoord() = default;
  constexpr ExtendedCoord(double v) : value_(v) {}  // NOLINT(implicit)
  static constexpr ExtendedCoord pos_inf() { return ExtendedCoord(kInf); }
  static constexpr ExtendedCoord neg_inf() { return ExtendedCoord(-kInf); }

  constexpr double value() const { return value_; }
  bool finite() const { return std::isfinite(value_); }
  constexpr operator double() const { return value_; }  // NOLINT(implicit)

 private:
  double value_ = 0.0;
};

/// Immutable colored point set with presorted coordinate orders.
class PointSet {
 public:
  /// Throws std::invalid_argument when a color is used fewer than twice, a
  /// coordinate is not finite, colors are not in [1, k], or k > n/2.
  explicit PointSet(std::vector<ColoredPoint> points);

  std::size_t size() const { return points_.size(); }
  int k() const { return k_; }
  const ColoredPoint& operator[](std::size_t i) const { return points_[i]; }
  std::span<const ColoredPoint> points() const { return points_; }

  /// Indices sorted by (x, y, index) and by (y, x, index).
  std::span<const std::size_t> by_x() const { return by_x_; }
  std::span<const std::size_t> by_y() const { return by_y_; }

  /// Multiplicity of each color; entry c-1 belongs to color c.
  std::span<const int> color_count() const { return color_count_; }

 private:
  std::vector<ColoredPoint> points_;
  int k_ = 0;
  std::vector<std::size_t> by_x_;
  std::vector<std::size_t> by_y_;
  std::vector<int> color_count_;
};

bool is_rainbow(std::span<const int> counts);

/// Rigid axis symmetry: optional x/y swap followed by optional negations.
/// Used to reduce the four orientations of a shape to one.
struct AxisMap {
  bool swap_xy = false;
  bool flip_x = false;
  bool flip_y = false;

  ColoredPoint apply(const ColoredPoint& p) const;
  ColoredPoint invert(const ColoredPoint& p) const;
  PointSet apply(const PointSet& ps) const;
};

// ---------------------------------------------------------------------------
// Annulus shapes.

enum class StripOrientation { Vertical, Horizontal };

/// Empty strip between two parallel axis lines. The side at or below `lo` is
/// the inside region, the side at or above `hi` the outside region.
struct Strip {
  StripOrientation orientation = StripOrientation::Vertical;
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

/// Named after the quadrant occupied by the inner region relative to the
/// outer corner. DownRight is the corridor whose legs run down and right.
enum class CorridorOrientation { DownRight, DownLeft, UpRight, UpLeft };

/// L-shaped corridor with both legs of width `width`. The corner coordinates
/// are the outer corner; `corner_x` may be infinite on the outer-side
/// direction, which degenerates the corridor to a strip.
struct LCorridor {
  CorridorOrientation orientation = CorridorOrientation::DownRight;
  ExtendedCoord corner_x;
  ExtendedCoord corner_y;
  double width = 0.0;
};

/// Axis-parallel box whose sides may lie at infinity.
struct Box {
  ExtendedCoord left = ExtendedCoord::neg_inf();
  ExtendedCoord right = ExtendedCoord::pos_inf();
  ExtendedCoord bottom = ExtendedCoord::neg_inf();
  ExtendedCoord top = ExtendedCoord::pos_inf();

  Box offset(double delta) const;
};

enum SideMask : unsigned {
  kSideNone = 0,
  kSideTop = 1u << 0,
  kSideBottom = 1u << 1,
  kSideLeft = 1u << 2,
  kSideRight = 1u << 3,
};

/// Square annulus: region between the outer square and its offset by `delta`.
/// The outer box is stored directly so that sides at infinity (strip and
/// corridor configurations) share the representation.
struct SquareAnnulus {
  Box outer;
  double delta = 0.0;

  unsigned infinite_sides() const;
  double center_x() const;  // NaN unless the horizontal extent is finite
  double center_y() const;
  ExtendedCoord radius() const;  // half side, +inf when any side is infinite
  Box inner() const { return outer.offset(delta); }
  double width() const { return delta; }
};

struct RectAnnulus {
  Box outer;
  Box inner;

  /// Side widths; a side at infinity reports +inf.
  double top_width() const;
  double bottom_width() const;
  double left_width() const;
  double right_width() const;
  double width() const;
  bool uniform() const;
};

struct CircularAnnulus {
  double center_x = 0.0;
  double center_y = 0.0;
  double r_in = 0.0;
  double r_out = 0.0;
  double width() const { return r_out - r_in; }
};

using Annulus =
    std::variant<Strip, LCorridor, SquareAnnulus, RectAnnulus, CircularAnnulus>;

double width_of(const Annulus& a);
std::string shape_name(const Annulus& a);

enum class Region { InsideRegion, AnnulusInterior, OutsideRegion };

Region classify(const ColoredPoint& p, const Annulus& a);

/// True iff every point is inside or outside (never interior), both regions
/// are rainbow, and the reported width is positive.
bool validate_solution(const Annulus& a, const PointSet& ps);

/// Color counts of the inside and outside regions; interior points are
/// counted in `interior`.
struct RegionCounts {
  std::vector<int> inside;
  std::vector<int> outside;
  std::size_t interior = 0;
};
RegionCounts count_regions(const Annulus& a, const PointSet& ps);

}  // namespace rba
