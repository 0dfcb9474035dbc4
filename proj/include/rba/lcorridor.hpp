#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rba/core.hpp"

namespace rba {

/// Monotone corner chain. Corners are sorted by strictly increasing y and
/// strictly increasing x.
///
/// A Lower staircase answers "largest X such that the quadrant
/// {x >= X, y <= Y} is rainbow" and reads the last corner with y <= Y.
/// An Upper staircase answers "smallest X such that {y >= Y} together with
/// {x <= X} is rainbow" and reads the last corner with y < Y. Both return
/// -inf when no corner applies (for Lower: not rainbow at any X; for Upper:
/// the half-plane above is rainbow on its own).
struct Staircase {
  enum class Kind { Lower, Upper };
  struct Corner {
    double x;
    double y;
  };

  Kind kind = Kind::Lower;
  std::vector<Corner> corners;

  ExtendedCoord x_at(ExtendedCoord y) const;
};

/// Lower and upper staircases of `ps` for the down-right corridor frame.
std::pair<Staircase, Staircase> build_staircases(const PointSet& ps);

/// Static range-maximum tree over the y-sorted order; each node keeps the
/// maximum x of its canonical subset.
class MaxCoordTree {
 public:
  explicit MaxCoordTree(const PointSet& ps);

  /// Rank (position in y order) of the max-x point among y-ranks [lo, hi),
  /// or nullopt when the range is empty.
  std::optional<std::size_t> argmax(std::size_t lo, std::size_t hi) const;
  double x_at_rank(std::size_t rank) const { return xs_[rank]; }

 private:
  std::size_t size_ = 0;
  std::size_t base_ = 1;
  std::vector<double> xs_;
  std::vector<std::size_t> tree_;  // ranks; npos marks empty
};

/// Result of a maximum-gap query: the gap length and its left delimiter.
struct GapResult {
  double gap = 0.0;
  ExtendedCoord left;
};

/// Insert-only range tree over the x coordinates of a growing point subset.
/// Nodes keep the extreme x values and the widest gap between consecutive
/// active coordinates of their canonical subset.
class GapTree {
 public:
  /// `xs` is the sorted universe of x coordinates that may be inserted.
  explicit GapTree(std::vector<double> xs);

  /// Activates universe slot `slot` (index into the sorted universe).
  void insert(std::size_t slot);
  std::size_t active() const { return active_; }

  /// Widest gap in the sequence lo, (active x in [lo, hi])..., hi. Ties are
  /// resolved toward the smallest left delimiter. Requires lo <= hi.
  GapResult max_gap(ExtendedCoord lo, ExtendedCoord hi) const;

 private:
  struct Node {
    std::size_t count = 0;
    double min_x = 0.0;
    double max_x = 0.0;
    double gap = -1.0;  // -1 when fewer than two active coordinates
    double gap_left = 0.0;
  };
  static Node merge(const Node& a, const Node& b);
  Node query(std::size_t lo, std::size_t hi) const;

  std::vector<double> xs_;
  std::size_t base_ = 1;
  std::vector<Node> tree_;
  std::size_t active_ = 0;
};

/// Upward sweep state for the down-right corridor frame. Exposes the three
/// per-step queries used by the solver.
class CorridorSweep {
 public:
  explicit CorridorSweep(const PointSet& ps);

  struct BoundaryPoints {
    /// y-rank of the lowest point whose y exceeds y_i + w_best; nullopt when
    /// none exists.
    std::optional<std::size_t> j;
    /// y-rank of the max-x point strictly between y_i and y(p_j) (or above
    /// y_i when j is absent); nullopt when that band is empty.
    std::optional<std::size_t> k;
  };
  BoundaryPoints boundary_points(double y_i, double w_best) const;

  /// (x(I_t), x(I_b)): upper staircase read at y_j, lower staircase at y_i.
  std::pair<ExtendedCoord, ExtendedCoord> rainbow_range(double y_i, ExtendedCoord y_j) const;

  const PointSet& points() const { return ps_; }
  const MaxCoordTree& max_tree() const { return max_tree_; }
  double y_at_rank(std::size_t r) const { return ys_[r]; }

  /// One improving step of the sweep, retained for inspection.
  struct Step {
    std::size_t i_rank;  // last y-rank of the sweep-line group
    std::size_t j_rank;  // n when the top side is at infinity
    double width;
  };

  /// Runs the full sweep. `trace`, when given, receives every improving step.
  std::optional<LCorridor> run(std::vector<Step>* trace = nullptr);

 private:
  const PointSet& ps_;
  std::vector<double> ys_;  // y coordinates in y order
  Staircase lower_;
  Staircase upper_;
  MaxCoordTree max_tree_;
};

/// Widest rainbow-bisecting empty L-corridor with the given orientation.
std::optional<LCorridor> max_rblc(const PointSet& ps, CorridorOrientation orientation);

/// Best over the four orientations.
std::optional<LCorridor> max_rblc_all(const PointSet& ps);

/// Symmetry taking the given orientation's frame to the down-right frame.
AxisMap corridor_frame(CorridorOrientation orientation);

}  // namespace rba
