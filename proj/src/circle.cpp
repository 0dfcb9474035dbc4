#include "rba/circle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace rba {

LiftedPoint lift(const ColoredPoint& p) { return {p.x, p.y, p.x * p.x + p.y * p.y}; }

Plane circle_plane(double cx, double cy, double rho) {
  return {2 * cx, 2 * cy, -(cx * cx + cy * cy - rho * rho)};
}

std::string kind_name(CenterCandidate::Kind kind) {
  switch (kind) {
    case CenterCandidate::Kind::Cir22: return "Cir22";
    case CenterCandidate::Kind::Cir21: return "Cir21";
    case CenterCandidate::Kind::PointCenter: return "PointCenter";
    case CenterCandidate::Kind::Boundary: return "Boundary";
    case CenterCandidate::Kind::LineConstrained: return "LineConstrained";
  }
  return "unknown";
}

namespace {

// n . c = h
struct LinearForm {
  double nx, ny, h;
};

LinearForm bisector(const ColoredPoint& p, const ColoredPoint& q) {
  return {q.x - p.x, q.y - p.y, 0.5 * ((q.x * q.x + q.y * q.y) - (p.x * p.x + p.y * p.y))};
}

LinearForm through(const ColoredPoint& p, const ColoredPoint& r) {
  const double nx = -(r.y - p.y), ny = r.x - p.x;
  return {nx, ny, nx * p.x + ny * p.y};
}

std::optional<std::pair<double, double>> meet(const LinearForm& u, const LinearForm& v) {
  const double det = u.nx * v.ny - u.ny * v.nx;
  const double scale = std::hypot(u.nx, u.ny) * std::hypot(v.nx, v.ny);
  if (!(std::abs(det) > 1e-12 * scale)) return std::nullopt;
  const double x = (u.h * v.ny - u.ny * v.h) / det;
  const double y = (u.nx * v.h - u.h * v.nx) / det;
  if (!std::isfinite(x) || !std::isfinite(y)) return std::nullopt;
  return std::pair{x, y};
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) out.emplace_back(p, q);
  return out;
}

template <class Emit>
void cir22_from(const PointSet& ps, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                std::size_t a, Emit&& emit) {
  const auto [p, q] = pairs[a];
  const LinearForm u = bisector(ps[p], ps[q]);
  for (std::size_t b = a + 1; b < pairs.size(); ++b) {
    const auto [r, s] = pairs[b];
    if (auto c = meet(u, bisector(ps[r], ps[s])))
      emit(CenterCandidate{c->first, c->second, CenterCandidate::Kind::Cir22, p, q, r, s});
  }
}

template <class Emit>
void cir21_from(const PointSet& ps, std::size_t p, std::size_t q, Emit&& emit) {
  const LinearForm u = bisector(ps[p], ps[q]);
  for (std::size_t r = 0; r < ps.size(); ++r) {
    if (r == p || r == q) continue;
    for (std::size_t inner : {p, q}) {
      if (auto c = meet(u, through(ps[inner], ps[r])))
        emit(CenterCandidate{c->first, c->second, CenterCandidate::Kind::Cir21, p, q, r,
                             CenterCandidate::npos});
    }
  }
}

struct Best {
  std::optional<CircularAnnulus> annulus;
  CenterCandidate::Kind kind = CenterCandidate::Kind::Cir22;

  void offer(const CircularAnnulus& a, CenterCandidate::Kind k) {
    if (!annulus || beats(a, *annulus)) {
      annulus = a;
      kind = k;
    }
  }
  static bool beats(const CircularAnnulus& a, const CircularAnnulus& b) {
    const double wa = a.width(), wb = b.width();
    if (wa != wb) return wa > wb;
    if (a.center_x != b.center_x) return a.center_x < b.center_x;
    return a.center_y < b.center_y;
  }
};

// Critical parameters along the line base + t * dir for one point set.
struct LineFrame {
  double bx, by, ux, uy;
  double param(double x, double y) const { return (x - bx) * ux + (y - by) * uy; }
  double offset(double x, double y) const { return (x - bx) * -uy + (y - by) * ux; }
  std::pair<double, double> at(double t) const { return {bx + t * ux, by + t * uy}; }
};

template <class Emit>
void line_candidates(const PointSet& ps, const LineFrame& lf, Emit&& emit) {
  const std::size_t n = ps.size();
  const LinearForm line{-lf.uy, lf.ux, -lf.uy * lf.bx + lf.ux * lf.by};
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (auto c = meet(line, bisector(ps[p], ps[q]))) emit(lf.param(c->first, c->second));
      if (auto c = meet(line, through(ps[p], ps[q]))) emit(lf.param(c->first, c->second));
      // stationary point of |c-p| - |c-q| when p and q lie on opposite sides:
      // the line meets line p q' with q' the mirror image of q
      const double h1 = lf.offset(ps[p].x, ps[p].y), h2 = lf.offset(ps[q].x, ps[q].y);
      if ((h1 > 0 && h2 < 0) || (h1 < 0 && h2 > 0)) {
        const double a = lf.param(ps[p].x, ps[p].y), b = lf.param(ps[q].x, ps[q].y);
        const double ah = std::abs(h1), bh = std::abs(h2);
        if (ah != bh) emit((a * bh - b * ah) / (bh - ah));
      }
    }
  }
}

}  // namespace

std::vector<CenterCandidate> cir22_candidates(const PointSet& ps) {
  std::vector<CenterCandidate> out;
  const auto pairs = all_pairs(ps.size());
  for (std::size_t a = 0; a < pairs.size(); ++a)
    cir22_from(ps, pairs, a, [&](const CenterCandidate& c) { out.push_back(c); });
  return out;
}

std::vector<CenterCandidate> cir21_candidates(const PointSet& ps) {
  std::vector<CenterCandidate> out;
  for (const auto& [p, q] : all_pairs(ps.size()))
    cir21_from(ps, p, q, [&](const CenterCandidate& c) { out.push_back(c); });
  return out;
}

namespace {

class CenterEvaluator {
 public:
  explicit CenterEvaluator(const PointSet& ps)
      : ps_(ps), order_(ps.size()), dist_(ps.size()), seen_(static_cast<std::size_t>(ps.k())),
        suffix_ok_(ps.size() + 1) {}

  std::optional<CircularAnnulus> operator()(double cx, double cy) {
    const std::size_t n = ps_.size();
    const auto k = static_cast<std::size_t>(ps_.k());
    for (std::size_t i = 0; i < n; ++i) {
      dist_[i] = std::hypot(ps_[i].x - cx, ps_[i].y - cy);
      order_[i] = i;
    }
    std::sort(order_.begin(), order_.end(),
              [&](std::size_t a, std::size_t b) { return dist_[a] < dist_[b]; });
    auto color = [&](std::size_t t) { return static_cast<std::size_t>(ps_[order_[t]].color.value - 1); };

    std::fill(seen_.begin(), seen_.end(), 0);
    std::size_t distinct = 0;
    suffix_ok_[n] = false;
    for (std::size_t t = n; t-- > 0;) {
      if (seen_[color(t)]++ == 0) ++distinct;
      suffix_ok_[t] = distinct == k;
    }
    std::fill(seen_.begin(), seen_.end(), 0);
    distinct = 0;
    std::optional<CircularAnnulus> best;
    for (std::size_t t = 0; t + 1 < n; ++t) {
      if (seen_[color(t)]++ == 0) ++distinct;
      const double r_in = dist_[order_[t]], r_out = dist_[order_[t + 1]];
      if (!(r_out > r_in) || distinct != k || !suffix_ok_[t + 1]) continue;
      if (!best || r_out - r_in > best->width()) best = CircularAnnulus{cx, cy, r_in, r_out};
    }
    return best;
  }

 private:
  const PointSet& ps_;
  std::vector<std::size_t> order_;
  std::vector<double> dist_;
  std::vector<int> seen_;
  std::vector<char> suffix_ok_;
};

}  // namespace

std::optional<CircularAnnulus> best_annulus_at_center(const PointSet& ps, double cx, double cy) {
  if (!std::isfinite(cx) || !std::isfinite(cy)) throw std::invalid_argument("center must be finite");
  CenterEvaluator eval(ps);
  return eval(cx, cy);
}

std::optional<CircleSolution> max_rbca(const PointSet& ps, unsigned threads) {
  const std::size_t n = ps.size();
  const auto pairs = all_pairs(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
  std::vector<Best> partial(threads);

  auto work = [&](unsigned tid) {
    CenterEvaluator eval(ps);
    Best& best = partial[tid];
    auto take = [&](const CenterCandidate& c) {
      if (auto a = eval(c.x, c.y)) best.offer(*a, c.kind);
    };
    for (std::size_t a = tid; a < pairs.size(); a += threads) {
      cir22_from(ps, pairs, a, take);
      cir21_from(ps, pairs[a].first, pairs[a].second, take);
    }
    if (tid != 0) return;
    for (const auto& p : ps.points())
      take(CenterCandidate{p.x, p.y, CenterCandidate::Kind::PointCenter});
    // the bounding box boundary: its corners and the critical points of its edges
    double x0 = kInf, x1 = -kInf, y0 = kInf, y1 = -kInf;
    for (const auto& p : ps.points()) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    for (double x : {x0, x1})
      for (double y : {y0, y1}) take(CenterCandidate{x, y, CenterCandidate::Kind::Boundary});
    const LineFrame edges[] = {{x0, y0, 1, 0}, {x0, y1, 1, 0}, {x0, y0, 0, 1}, {x1, y0, 0, 1}};
    for (const auto& lf : edges) {
      const double len = lf.ux != 0 ? x1 - x0 : y1 - y0;
      line_candidates(ps, lf, [&](double t) {
        if (!(t > 0 && t < len)) return;
        const auto [x, y] = lf.at(t);
        take(CenterCandidate{x, y, CenterCandidate::Kind::Boundary});
      });
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Best best;
  for (const auto& p : partial)
    if (p.annulus) best.offer(*p.annulus, p.kind);
  if (!best.annulus) return std::nullopt;
  return CircleSolution{*best.annulus, best.kind};
}

Line Line::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  const auto eq = s.find('=');
  if (eq == std::string::npos || s.find('=', eq + 1) != std::string::npos)
    throw std::invalid_argument("line must contain one '=': " + text);

  // accumulates coeff_x * x + coeff_y * y + constant for one side
  auto side = [&](const std::string& part, double& cx, double& cy, double& c0) {
    if (part.empty()) throw std::invalid_argument("empty side in line: " + text);
    std::size_t pos = 0;
    while (pos < part.size()) {
      double sign = 1.0;
      if (part[pos] == '+' || part[pos] == '-') {
        if (part[pos] == '-') sign = -1.0;
        ++pos;
      }
      double coeff = 1.0;
      bool have_number = false;
      if (pos < part.size() && (std::isdigit(static_cast<unsigned char>(part[pos])) || part[pos] == '.')) {
        char* endp = nullptr;
        coeff = std::strtod(part.c_str() + pos, &endp);
        const auto used = static_cast<std::size_t>(endp - (part.c_str() + pos));
        if (used == 0) throw std::invalid_argument("bad number in line: " + text);
        pos += used;
        have_number = true;
        if (pos < part.size() && part[pos] == '*') ++pos;
      }
      if (pos < part.size() && (part[pos] == 'x' || part[pos] == 'y')) {
        (part[pos] == 'x' ? cx : cy) += sign * coeff;
        ++pos;
      } else if (have_number) {
        c0 += sign * coeff;
      } else {
        throw std::invalid_argument("bad term in line: " + text);
      }
    }
  };
  double lx = 0, ly = 0, lc = 0, rx = 0, ry = 0, rc = 0;
  side(s.substr(0, eq), lx, ly, lc);
  side(s.substr(eq + 1), rx, ry, rc);
  Line l{lx - rx, ly - ry, rc - lc};
  if (l.a == 0.0 && l.b == 0.0) throw std::invalid_argument("line has no x or y term: " + text);
  if (!std::isfinite(l.a) || !std::isfinite(l.b) || !std::isfinite(l.c))
    throw std::invalid_argument("line coefficients must be finite: " + text);
  return l;
}

double Line::base_x() const { return c * a / (a * a + b * b); }
double Line::base_y() const { return c * b / (a * a + b * b); }
double Line::dir_x() const { return -b / std::hypot(a, b); }
double Line::dir_y() const { return a / std::hypot(a, b); }

std::pair<double, double> line_window(const PointSet& ps, const Line& line) {
  const LineFrame lf{line.base_x(), line.base_y(), line.dir_x(), line.dir_y()};
  double lo = kInf, hi = -kInf, x0 = kInf, x1 = -kInf, y0 = kInf, y1 = -kInf;
  for (const auto& p : ps.points()) {
    const double t = lf.param(p.x, p.y);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double diag = std::hypot(x1 - x0, y1 - y0);
  return {lo - diag, hi + diag};
}

std::optional<CircularAnnulus> max_rbca_on_line(const PointSet& ps, const Line& line) {
  const LineFrame lf{line.base_x(), line.base_y(), line.dir_x(), line.dir_y()};
  const auto [lo, hi] = line_window(ps, line);
  CenterEvaluator eval(ps);
  Best best;
  auto take = [&](double t) {
    if (!(t >= lo && t <= hi)) return;
    const auto [x, y] = lf.at(t);
    if (auto a = eval(x, y)) best.offer(*a, CenterCandidate::Kind::LineConstrained);
  };
  line_candidates(ps, lf, take);
  take(lo);
  take(hi);
  return best.annulus;
}

}  // namespace rba
