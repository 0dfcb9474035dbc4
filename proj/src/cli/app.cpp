#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rba/cli.hpp"

namespace rba::cli {

namespace {

void print_text(std::ostream& out, const SolutionReport& r) {
  out << "shape: " << shape_name(r.annulus) << "\n"
      << "width: " << r.width << "\n"
      << "provenance: " << r.provenance << "\n"
      << "elapsed_ms: " << r.elapsed_ms << "\n";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum-width rainbow-bisecting empty annuli"};
  app.require_subcommand(1);
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  std::string shape_name_arg, input, line_text, svg_path;
  bool fast = false, as_json = false;
  solve_cmd->add_option("--shape", shape_name_arg, "strip|lcorridor|square|rect|circle")->required();
  solve_cmd->add_option("--input", input, "Instance CSV")->required();
  solve_cmd->add_flag("--fast", fast, "Use the fast rectangle decision");
  solve_cmd->add_option("--line", line_text, "Constrain the circle center to a*x+b*y=c");
  solve_cmd->add_option("--svg", svg_path, "Write an SVG drawing");
  solve_cmd->add_flag("--json", as_json, "Print the report as JSON");
  solve_cmd->add_option("--threads", threads, "Worker count");

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  std::size_t n = 0;
  int k = 0;
  std::string dist = "uniform";
  std::uint64_t seed = 1;
  gen_cmd->add_option("--n", n, "Point count")->required();
  gen_cmd->add_option("--k", k, "Color count")->required();
  gen_cmd->add_option("--dist", dist, "uniform|clusters|rings");
  gen_cmd->add_option("--seed", seed, "Random seed");

  auto* check_cmd = app.add_subcommand("check", "Validate a JSON report against an instance");
  std::string solution;
  check_cmd->add_option("--input", input, "Instance CSV")->required();
  check_cmd->add_option("--solution", solution, "Report JSON")->required();

  auto* bench_cmd = app.add_subcommand("bench", "Time a solver over generated instances");
  std::vector<std::size_t> sizes;
  int trials = 3, bench_k = 3;
  bench_cmd->add_option("--shape", shape_name_arg, "Shape")->required();
  bench_cmd->add_option("--sizes", sizes, "Comma-separated sizes")->required()->delimiter(',');
  bench_cmd->add_option("--trials", trials, "Trials per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", seed, "Random seed");
  bench_cmd->add_option("--k", bench_k, "Color count");
  bench_cmd->add_flag("--fast", fast, "Use the fast rectangle decision");
  bench_cmd->add_option("--threads", threads, "Worker count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*solve_cmd) {
      const Shape shape = parse_shape(shape_name_arg);
      SolveOptions opt{fast, std::nullopt, threads};
      if (!line_text.empty()) opt.line = Line::parse(line_text);
      const PointSet ps = read_instance_file(input);
      const auto r = solve(shape, ps, opt);
      if (!r) {
        err << "infeasible\n";
        return 2;
      }
      if (as_json)
        out << report_to_json(*r) << "\n";
      else
        print_text(out, *r);
      if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw ParseError("cannot write " + svg_path);
        svg << render_svg(ps, r->annulus);
      }
      return 0;
    }
    if (*gen_cmd) {
      write_instance(out, generate(n, k, parse_distribution(dist), seed));
      return 0;
    }
    if (*check_cmd) {
      const PointSet ps = read_instance_file(input);
      const SolutionReport r = report_from_json(slurp(solution));
      const auto problems = check_report(r, ps);
      for (const auto& p : problems) err << "mismatch: " << p << "\n";
      if (!problems.empty()) return 2;
      out << "valid\n";
      return 0;
    }
    if (*bench_cmd) {
      const Shape shape = parse_shape(shape_name_arg);
      const auto rows = bench(shape, sizes, bench_k, trials, seed, SolveOptions{fast, std::nullopt, threads});
      out << "n,k,mean_ms,width\n";
      for (const auto& r : rows) out << r.n << ',' << r.k << ',' << r.mean_ms << ',' << r.width << "\n";
      out << "# slope " << loglog_slope(rows) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace rba::cli
