#include "rba/strip.hpp"

#include <vector>

namespace rba {

std::optional<Strip> max_rbes(const PointSet& ps, StripOrientation orientation) {
  const bool vertical = orientation == StripOrientation::Vertical;
  const auto order = vertical ? ps.by_x() : ps.by_y();
  const std::size_t n = order.size();
  const auto k = static_cast<std::size_t>(ps.k());
  auto coord = [&](std::size_t t) {
    const auto& p = ps[order[t]];
    return vertical ? p.x : p.y;
  };

  // prefix_colors[t] = distinct colors among order[0..t]; suffix likewise
  // among order[t..n-1].
  std::vector<std::size_t> prefix_colors(n), suffix_colors(n);
  std::vector<int> seen(k, 0);
  std::size_t distinct = 0;
  for (std::size_t t = 0; t < n; ++t) {
    auto c = static_cast<std::size_t>(ps[order[t]].color.value - 1);
    if (seen[c]++ == 0) ++distinct;
    prefix_colors[t] = distinct;
  }
  seen.assign(k, 0);
  distinct = 0;
  for (std::size_t t = n; t-- > 0;) {
    auto c = static_cast<std::size_t>(ps[order[t]].color.value - 1);
    if (seen[c]++ == 0) ++distinct;
    suffix_colors[t] = distinct;
  }

  std::optional<Strip> best;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    const double lo = coord(t);
    const double hi = coord(t + 1);
    if (!(hi > lo)) continue;
    if (prefix_colors[t] != k || suffix_colors[t + 1] != k) continue;
    if (!best || hi - lo > best->width()) best = Strip{orientation, lo, hi};
  }
  return best;
}

std::optional<Strip> max_rbes_any(const PointSet& ps) {
  auto v = max_rbes(ps, StripOrientation::Vertical);
  auto h = max_rbes(ps, StripOrientation::Horizontal);
  if (!v) return h;
  if (!h) return v;
  return h->width() > v->width() ? h : v;
}

}  // namespace rba
