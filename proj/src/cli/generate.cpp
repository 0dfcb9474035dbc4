#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "rba/cli.hpp"

namespace rba::cli {

Distribution parse_distribution(const std::string& name) {
  if (name == "uniform") return Distribution::Uniform;
  if (name == "clusters") return Distribution::Clusters;
  if (name == "rings") return Distribution::Rings;
  throw std::invalid_argument("unknown distribution \"" + name + "\"");
}

namespace {

// Each color twice, the rest uniform, in shuffled order.
std::vector<int> color_sequence(std::size_t n, int k, std::mt19937_64& rng) {
  std::vector<int> colors;
  for (int c = 1; c <= k; ++c) colors.insert(colors.end(), {c, c});
  std::uniform_int_distribution<int> pick(1, k);
  while (colors.size() < n) colors.push_back(pick(rng));
  std::shuffle(colors.begin(), colors.end(), rng);
  return colors;
}

std::vector<double> distinct_integers(std::size_t n, long range, std::mt19937_64& rng) {
  std::set<long> seen;
  std::uniform_int_distribution<long> pick(0, range - 1);
  std::vector<double> out;
  while (out.size() < n) {
    const long v = pick(rng);
    if (seen.insert(v).second) out.push_back(static_cast<double>(v));
  }
  return out;
}

}  // namespace

std::vector<ColoredPoint> generate(std::size_t n, int k, Distribution dist, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (static_cast<std::size_t>(k) > n / 2)
    throw std::invalid_argument("k = " + std::to_string(k) + " exceeds n / 2 = " + std::to_string(n / 2));
  std::mt19937_64 rng(seed);
  const long range = std::max<long>(101, 4 * static_cast<long>(n));
  std::vector<ColoredPoint> pts(n);

  switch (dist) {
    case Distribution::Uniform: {
      const auto xs = distinct_integers(n, range, rng);
      const auto ys = distinct_integers(n, range, rng);
      const auto cs = color_sequence(n, k, rng);
      for (std::size_t i = 0; i < n; ++i) pts[i] = ColoredPoint{xs[i], ys[i], ColorId{cs[i]}};
      break;
    }
    case Distribution::Clusters: {
      const std::size_t clusters = std::max<std::size_t>(1, n / 10);
      std::uniform_real_distribution<double> where(0.0, static_cast<double>(range - 1));
      std::normal_distribution<double> spread(0.0, static_cast<double>(range) / 20.0);
      std::vector<std::pair<double, double>> centers(clusters);
      for (auto& c : centers) c = {where(rng), where(rng)};
      std::uniform_int_distribution<std::size_t> which(0, clusters - 1);
      std::set<long> used_x, used_y;
      const auto cs = color_sequence(n, k, rng);
      auto snap = [&](double v) { return std::clamp(std::lround(v), 0L, range - 1); };
      for (std::size_t i = 0; i < n;) {
        const auto& c = centers[which(rng)];
        const long x = snap(c.first + spread(rng)), y = snap(c.second + spread(rng));
        if (used_x.contains(x) || used_y.contains(y)) continue;
        used_x.insert(x);
        used_y.insert(y);
        pts[i] = ColoredPoint{static_cast<double>(x), static_cast<double>(y), ColorId{cs[i]}};
        ++i;
      }
      break;
    }
    case Distribution::Rings: {
      const std::size_t inner = n / 2;
      std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
      std::uniform_real_distribution<double> jitter(-1.0, 1.0);
      std::uniform_int_distribution<int> pick(1, k);
      std::set<double> used_x, used_y;
      for (std::size_t i = 0; i < n;) {
        const bool in = i < inner;
        const std::size_t slot = in ? i : i - inner;
        const int color = slot < static_cast<std::size_t>(k) ? static_cast<int>(slot) + 1 : pick(rng);
        const double r = (in ? 10.0 : 30.0) + jitter(rng), t = angle(rng);
        const double x = 50.0 + r * std::cos(t), y = 50.0 + r * std::sin(t);
        if (used_x.contains(x) || used_y.contains(y)) continue;
        used_x.insert(x);
        used_y.insert(y);
        pts[i] = ColoredPoint{x, y, ColorId{color}};
        ++i;
      }
      break;
    }
  }
  return pts;
}

}  // namespace rba::cli
