#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rba/core.hpp"

namespace rba {

/// Horizontal gap between two consecutive delimiters of a gap sequence.
/// Either side may be infinite.
struct WGap {
  ExtendedCoord left_x;
  ExtendedCoord right_x;
  double length() const { return right_x.value() - left_x.value(); }
};

/// [a, b] over a slab listed by x; `a` and `b` index that list.
struct MinimalRainbowInterval {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<int> color_counter;
};

/// All minimal rainbow intervals of `slab` (sorted by x) with the left
/// endpoint in index range [l_first, l_last] and the right endpoint in
/// [r_first, r_last], ordered left to right.
std::vector<MinimalRainbowInterval> minimal_rainbow_intervals(std::span<const ColoredPoint> slab,
                                                              int k, std::size_t l_first,
                                                              std::size_t l_last,
                                                              std::size_t r_first,
                                                              std::size_t r_last);

/// Keeps, for every interval, the rightmost gap of `lefts` ending at or
/// before x(a) and the leftmost gap of `rights` starting at or after x(b).
/// Duplicates are removed; lefts come first in the result.
std::vector<WGap> relevant_w_gaps(std::span<const ColoredPoint> slab,
                                  std::span<const MinimalRainbowInterval> intervals,
                                  std::span<const WGap> lefts, std::span<const WGap> rights);

/// Per-color Fenwick trees over each color's own x order. Points become
/// active by insertion and are addressed by their global x slot.
class ColorRangeTrees {
 public:
  ColorRangeTrees() = default;
  /// `slot_colors[s]` is the color index (0-based) of the point at x slot s.
  explicit ColorRangeTrees(std::vector<std::size_t> slot_colors, std::size_t k);

  void clear();
  void insert(std::size_t slot);
  std::size_t k() const { return members_.size(); }

  /// Active points of color c with slot in [lo, hi).
  int count(std::size_t c, std::size_t lo, std::size_t hi) const;
  /// Smallest active slot >= s of color c.
  std::optional<std::size_t> successor(std::size_t c, std::size_t s) const;
  /// Largest active slot <= s of color c.
  std::optional<std::size_t> predecessor(std::size_t c, std::size_t s) const;

 private:
  int prefix(std::size_t c, std::size_t m) const;  // active among first m members
  std::optional<std::size_t> kth(std::size_t c, int k) const;

  std::vector<std::size_t> color_of_;
  std::vector<std::size_t> local_;               // slot -> position in its color list
  std::vector<std::vector<std::size_t>> members_;  // color -> slots ascending
  std::vector<std::vector<int>> fenwick_;
};

/// Active x slots mapped to (x_s, x_next - x_s), kept as a max segment tree
/// keyed by slot. The 3-sided query "extreme slot in [lo, hi) with gap >= w"
/// walks the tree.
class GapPointTree {
 public:
  GapPointTree() = default;
  explicit GapPointTree(std::vector<double> xs);

  void clear();
  void insert(std::size_t slot);
  bool active(std::size_t slot) const { return count_[base_ + slot] != 0; }

  std::optional<std::size_t> next_active(std::size_t from) const;   // first active >= from
  std::optional<std::size_t> prev_active(std::size_t upto) const;   // last active <= upto
  std::optional<std::size_t> last_active() const;
  /// Gap from an active slot to the next active one (-inf for the last).
  double gap(std::size_t slot) const { return gap_[base_ + slot]; }

  std::optional<std::size_t> leftmost_at_least(std::size_t lo, std::size_t hi, double w) const;
  std::optional<std::size_t> rightmost_at_least(std::size_t lo, std::size_t hi, double w) const;

 private:
  void set(std::size_t slot, double gap, int count);
  std::optional<std::size_t> descend_first(std::size_t v, std::size_t l, std::size_t r,
                                           std::size_t lo, std::size_t hi, double w) const;
  std::optional<std::size_t> descend_last(std::size_t v, std::size_t l, std::size_t r,
                                          std::size_t lo, std::size_t hi, double w) const;
  std::optional<std::size_t> first_counted(std::size_t v, std::size_t l, std::size_t r,
                                           std::size_t lo) const;
  std::optional<std::size_t> last_counted(std::size_t v, std::size_t l, std::size_t r,
                                          std::size_t hi) const;

  std::vector<double> xs_;
  std::size_t base_ = 1;
  std::vector<double> gap_;
  std::vector<int> count_;
};

struct DecisionOutcome {
  bool feasible = false;
  std::optional<RectAnnulus> witness;
};

/// Point set viewed with ranks in descending y order and slots in ascending
/// x order, plus the band queries of the decision procedures.
class RectFrame {
 public:
  explicit RectFrame(const PointSet& ps);

  const PointSet& points() const { return ps_; }
  std::size_t size() const { return ps_.size(); }
  /// Point of rank r (0 is the highest).
  const ColoredPoint& at(std::size_t r) const { return ps_[order_[r]]; }
  std::size_t slot_of_rank(std::size_t r) const { return slot_of_rank_[r]; }
  double x_at_slot(std::size_t s) const { return xs_[s]; }
  const std::vector<double>& slot_xs() const { return xs_; }
  /// True when no two points share an x or a y coordinate.
  bool general_position() const { return general_; }

  /// Largest slot < s among ranks [lo, hi).
  std::optional<std::size_t> max_slot_below(std::size_t lo, std::size_t hi, std::size_t s) const;
  /// Smallest slot >= s among ranks [lo, hi).
  std::optional<std::size_t> min_slot_from(std::size_t lo, std::size_t hi, std::size_t s) const;

 private:
  const PointSet& ps_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> slot_of_rank_;
  std::vector<double> xs_;
  bool general_ = true;
  std::size_t base_ = 1;
  std::vector<std::vector<std::size_t>> tree_;  // merge-sort tree over ranks
};

/// Width-w decision on ranks of `frame`: top outer side through rank i, bottom
/// through rank j (nullopt places it at -inf). Throws std::invalid_argument
/// unless i + 1 < j < n and w > 0.
DecisionOutcome dp_decision(const RectFrame& frame, std::size_t i, std::optional<std::size_t> j,
                            double w);

/// Structures over the slab P_ij kept current while j grows.
class SlabIndex {
 public:
  explicit SlabIndex(const RectFrame& frame);

  /// Empties the slab and anchors it below rank i.
  void reset(std::size_t i);
  /// Inserts ranks up to (excluding) j; nullopt inserts every rank.
  void extend_to(std::optional<std::size_t> j);
  std::size_t anchor() const { return i_; }
  std::size_t end() const { return end_; }

  const RectFrame& frame() const { return frame_; }
  const ColorRangeTrees& colors() const { return colors_; }
  const GapPointTree& gaps() const { return gaps_; }

 private:
  const RectFrame& frame_;
  ColorRangeTrees colors_;
  GapPointTree gaps_;
  std::size_t i_ = 0;
  std::size_t end_ = 0;
};

/// Same outcome as dp_decision via minimal rainbow intervals and the relevant
/// w-gaps. `slab` must be current for (i, j). Requires general position.
DecisionOutcome dp_decision_fast(const SlabIndex& slab, std::size_t i,
                                 std::optional<std::size_t> j, double w);

/// Widest uniform annulus whose outer top side passes through rank i.
std::optional<RectAnnulus> max_anchored_rbra_for_top_point(const RectFrame& frame, std::size_t i,
                                                           bool fast = false);

/// Widest uniform rectangular annulus over the four anchor orientations. The
/// fast path falls back to the slow decision when coordinates repeat.
std::optional<RectAnnulus> max_rbra(const PointSet& ps, bool fast = false, unsigned threads = 1);

}  // namespace rba
