#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rba/circle.hpp"
#include "rba/core.hpp"

namespace rba::cli {

/// Malformed instance or report; `what()` carries the location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Shape { Strip, LCorridor, Square, Rect, Circle };

Shape parse_shape(const std::string& name);
std::string shape_tag(Shape shape);

/// CSV with header "x,y,color". Errors name the offending line.
PointSet read_instance(std::istream& in);
PointSet read_instance_file(const std::string& path);
void write_instance(std::ostream& out, std::span<const ColoredPoint> points);

struct SolutionReport {
  Annulus annulus;
  double width = 0.0;
  std::string provenance;
  double elapsed_ms = 0.0;
};

struct SolveOptions {
  bool fast = false;
  std::optional<Line> line;
  unsigned threads = 1;
};

/// Runs the solver for `shape`; nullopt when infeasible.
std::optional<SolutionReport> solve(Shape shape, const PointSet& ps, const SolveOptions& options);

std::string report_to_json(const SolutionReport& report);
SolutionReport report_from_json(const std::string& text);

/// Empty when the report is consistent with the instance; otherwise one
/// message per mismatch.
std::vector<std::string> check_report(const SolutionReport& report, const PointSet& ps);

/// y-up drawing with a 5% margin; sides at infinity are dashed and clipped.
std::string render_svg(const PointSet& ps, const Annulus& annulus);

enum class Distribution { Uniform, Clusters, Rings };

Distribution parse_distribution(const std::string& name);

/// Distinct coordinates, every color used at least twice, deterministic in
/// the seed. Throws std::invalid_argument when k > n / 2 or k < 1.
std::vector<ColoredPoint> generate(std::size_t n, int k, Distribution dist, std::uint64_t seed);

struct BenchRow {
  std::size_t n = 0;
  int k = 0;
  double mean_ms = 0.0;
  double width = 0.0;
};

/// Least-squares slope of log(mean_ms) against log(n).
double loglog_slope(const std::vector<BenchRow>& rows);

std::vector<BenchRow> bench(Shape shape, const std::vector<std::size_t>& sizes, int k, int trials,
                            std::uint64_t seed, const SolveOptions& options);

/// Entry point of the rba executable. Exit codes: 0 success, 1 error,
/// 2 infeasible or failed check.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rba::cli
