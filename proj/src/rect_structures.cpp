#include <algorithm>
#include <stdexcept>

#include "rba/rect.hpp"

namespace rba {

ColorRangeTrees::ColorRangeTrees(std::vector<std::size_t> slot_colors, std::size_t k)
    : color_of_(std::move(slot_colors)), local_(color_of_.size()), members_(k), fenwick_(k) {
  for (std::size_t s = 0; s < color_of_.size(); ++s) {
    auto& m = members_.at(color_of_[s]);
    local_[s] = m.size();
    m.push_back(s);
  }
  for (std::size_t c = 0; c < k; ++c) fenwick_[c].assign(members_[c].size() + 1, 0);
}

void ColorRangeTrees::clear() {
  for (auto& f : fenwick_) std::fill(f.begin(), f.end(), 0);
}

void ColorRangeTrees::insert(std::size_t slot) {
  auto& f = fenwick_[color_of_[slot]];
  for (std::size_t p = local_[slot] + 1; p < f.size(); p += p & (~p + 1)) ++f[p];
}

int ColorRangeTrees::prefix(std::size_t c, std::size_t m) const {
  int sum = 0;
  for (; m > 0; m -= m & (~m + 1)) sum += fenwick_[c][m];
  return sum;
}

std::optional<std::size_t> ColorRangeTrees::kth(std::size_t c, int k) const {
  const auto& f = fenwick_[c];
  const std::size_t size = f.size() - 1;
  std::size_t step = 1;
  while (step * 2 <= size) step *= 2;
  std::size_t pos = 0;
  for (; step > 0; step >>= 1) {
    if (pos + step <= size && f[pos + step] < k) {
      pos += step;
      k -= f[pos];
    }
  }
  if (pos >= size) return std::nullopt;
  return members_[c][pos];
}

int ColorRangeTrees::count(std::size_t c, std::size_t lo, std::size_t hi) const {
  if (lo >= hi) return 0;
  const auto& m = members_[c];
  const auto a = static_cast<std::size_t>(std::lower_bound(m.begin(), m.end(), lo) - m.begin());
  const auto b = static_cast<std::size_t>(std::lower_bound(m.begin(), m.end(), hi) - m.begin());
  return prefix(c, b) - prefix(c, a);
}

std::optional<std::size_t> ColorRangeTrees::successor(std::size_t c, std::size_t s) const {
  const auto& m = members_[c];
  const auto a = static_cast<std::size_t>(std::lower_bound(m.begin(), m.end(), s) - m.begin());
  return kth(c, prefix(c, a) + 1);
}

std::optional<std::size_t> ColorRangeTrees::predecessor(std::size_t c, std::size_t s) const {
  const auto& m = members_[c];
  const auto a = static_cast<std::size_t>(std::upper_bound(m.begin(), m.end(), s) - m.begin());
  const int p = prefix(c, a);
  if (p == 0) return std::nullopt;
  return kth(c, p);
}

GapPointTree::GapPointTree(std::vector<double> xs) : xs_(std::move(xs)) {
  while (base_ < xs_.size()) base_ <<= 1;
  gap_.assign(2 * base_, -kInf);
  count_.assign(2 * base_, 0);
}

void GapPointTree::clear() {
  std::fill(gap_.begin(), gap_.end(), -kInf);
  std::fill(count_.begin(), count_.end(), 0);
}

void GapPointTree::set(std::size_t slot, double gap, int count) {
  std::size_t v = base_ + slot;
  gap_[v] = gap;
  count_[v] = count;
  for (v >>= 1; v >= 1; v >>= 1) {
    gap_[v] = std::max(gap_[2 * v], gap_[2 * v + 1]);
    count_[v] = count_[2 * v] + count_[2 * v + 1];
  }
}

void GapPointTree::insert(std::size_t slot) {
  if (active(slot)) return;
  const auto prev = slot > 0 ? prev_active(slot - 1) : std::nullopt;
  const auto next = next_active(slot + 1);
  set(slot, next ? xs_[*next] - xs_[slot] : -kInf, 1);
  if (prev) set(*prev, xs_[slot] - xs_[*prev], 1);
}

std::optional<std::size_t> GapPointTree::first_counted(std::size_t v, std::size_t l, std::size_t r,
                                                       std::size_t lo) const {
  if (r <= lo || count_[v] == 0) return std::nullopt;
  if (r - l == 1) return l;
  const std::size_t m = (l + r) / 2;
  if (auto a = first_counted(2 * v, l, m, lo)) return a;
  return first_counted(2 * v + 1, m, r, lo);
}

std::optional<std::size_t> GapPointTree::last_counted(std::size_t v, std::size_t l, std::size_t r,
                                                      std::size_t hi) const {
  if (l >= hi || count_[v] == 0) return std::nullopt;
  if (r - l == 1) return l;
  const std::size_t m = (l + r) / 2;
  if (auto a = last_counted(2 * v + 1, m, r, hi)) return a;
  return last_counted(2 * v, l, m, hi);
}

std::optional<std::size_t> GapPointTree::next_active(std::size_t from) const {
  if (from >= xs_.size()) return std::nullopt;
  return first_counted(1, 0, base_, from);
}

std::optional<std::size_t> GapPointTree::prev_active(std::size_t upto) const {
  return last_counted(1, 0, base_, std::min(upto + 1, xs_.size()));
}

std::optional<std::size_t> GapPointTree::last_active() const {
  return last_counted(1, 0, base_, xs_.size());
}

std::optional<std::size_t> GapPointTree::descend_first(std::size_t v, std::size_t l, std::size_t r,
                                                       std::size_t lo, std::size_t hi,
                                                       double w) const {
  if (r <= lo || l >= hi || gap_[v] < w) return std::nullopt;
  if (r - l == 1) return l;
  const std::size_t m = (l + r) / 2;
  if (auto a = descend_first(2 * v, l, m, lo, hi, w)) return a;
  return descend_first(2 * v + 1, m, r, lo, hi, w);
}

std::optional<std::size_t> GapPointTree::descend_last(std::size_t v, std::size_t l, std::size_t r,
                                                      std::size_t lo, std::size_t hi,
                                                      double w) const {
  if (r <= lo || l >= hi || gap_[v] < w) return std::nullopt;
  if (r - l == 1) return l;
  const std::size_t m = (l + r) / 2;
  if (auto a = descend_last(2 * v + 1, m, r, lo, hi, w)) return a;
  return descend_last(2 * v, l, m, lo, hi, w);
}

std::optional<std::size_t> GapPointTree::leftmost_at_least(std::size_t lo, std::size_t hi,
                                                           double w) const {
  if (lo >= hi) return std::nullopt;
  return descend_first(1, 0, base_, lo, hi, w);
}

std::optional<std::size_t> GapPointTree::rightmost_at_least(std::size_t lo, std::size_t hi,
                                                            double w) const {
  if (lo >= hi) return std::nullopt;
  return descend_last(1, 0, base_, lo, hi, w);
}

RectFrame::RectFrame(const PointSet& ps) : ps_(ps) {
  const std::size_t n = ps.size();
  const auto by_y = ps.by_y();
  order_.assign(by_y.rbegin(), by_y.rend());
  std::vector<std::size_t> slot_of_point(n);
  xs_.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    slot_of_point[ps.by_x()[s]] = s;
    xs_.push_back(ps[ps.by_x()[s]].x);
  }
  slot_of_rank_.resize(n);
  for (std::size_t r = 0; r < n; ++r) slot_of_rank_[r] = slot_of_point[order_[r]];
  for (std::size_t s = 1; s < n; ++s) {
    if (xs_[s] == xs_[s - 1] || ps[by_y[s]].y == ps[by_y[s - 1]].y) general_ = false;
  }

  while (base_ < n) base_ <<= 1;
  tree_.resize(2 * base_);
  for (std::size_t r = 0; r < n; ++r) tree_[base_ + r] = {slot_of_rank_[r]};
  for (std::size_t v = base_; v-- > 1;) {
    const auto& a = tree_[2 * v];
    const auto& b = tree_[2 * v + 1];
    tree_[v].resize(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), tree_[v].begin());
  }
}

std::optional<std::size_t> RectFrame::max_slot_below(std::size_t lo, std::size_t hi,
                                                     std::size_t s) const {
  std::optional<std::size_t> best;
  auto take = [&](const std::vector<std::size_t>& node) {
    auto it = std::lower_bound(node.begin(), node.end(), s);
    if (it == node.begin()) return;
    const std::size_t v = *std::prev(it);
    if (!best || v > *best) best = v;
  };
  for (lo += base_, hi += base_; lo < hi; lo >>= 1, hi >>= 1) {
    if (lo & 1) take(tree_[lo++]);
    if (hi & 1) take(tree_[--hi]);
  }
  return best;
}

std::optional<std::size_t> RectFrame::min_slot_from(std::size_t lo, std::size_t hi,
                                                    std::size_t s) const {
  std::optional<std::size_t> best;
  auto take = [&](const std::vector<std::size_t>& node) {
    auto it = std::lower_bound(node.begin(), node.end(), s);
    if (it == node.end()) return;
    if (!best || *it < *best) best = *it;
  };
  for (lo += base_, hi += base_; lo < hi; lo >>= 1, hi >>= 1) {
    if (lo & 1) take(tree_[lo++]);
    if (hi & 1) take(tree_[--hi]);
  }
  return best;
}

SlabIndex::SlabIndex(const RectFrame& frame) : frame_(frame), gaps_(frame.slot_xs()) {
  const std::size_t n = frame.size();
  std::vector<std::size_t> slot_colors(n);
  for (std::size_t r = 0; r < n; ++r)
    slot_colors[frame.slot_of_rank(r)] = static_cast<std::size_t>(frame.at(r).color.value - 1);
  colors_ = ColorRangeTrees(std::move(slot_colors), static_cast<std::size_t>(frame.points().k()));
}

void SlabIndex::reset(std::size_t i) {
  if (i >= frame_.size()) throw std::invalid_argument("slab anchor out of range");
  colors_.clear();
  gaps_.clear();
  i_ = i;
  end_ = i + 1;
}

void SlabIndex::extend_to(std::optional<std::size_t> j) {
  const std::size_t target = std::min(j.value_or(frame_.size()), frame_.size());
  for (; end_ < target; ++end_) {
    const std::size_t s = frame_.slot_of_rank(end_);
    colors_.insert(s);
    gaps_.insert(s);
  }
}

}  // namespace rba
