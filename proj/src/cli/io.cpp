#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rba/cli.hpp"

namespace rba::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <class T>
bool parse_number(const std::string& s, T& v) {
  const char* first = s.data();
  const char* last = first + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  return ec == std::errc() && ptr == last && first != last;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

PointSet read_instance(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  bool header = false;
  std::vector<ColoredPoint> points;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto cells = split(t);
    if (!header) {
      if (cells != std::vector<std::string>{"x", "y", "color"})
        fail(number, "expected header \"x,y,color\"");
      header = true;
      continue;
    }
    if (cells.size() != 3) fail(number, "expected 3 fields, got " + std::to_string(cells.size()));
    ColoredPoint p;
    if (!parse_number(cells[0], p.x) || !std::isfinite(p.x)) fail(number, "bad x \"" + cells[0] + "\"");
    if (!parse_number(cells[1], p.y) || !std::isfinite(p.y)) fail(number, "bad y \"" + cells[1] + "\"");
    int c = 0;
    if (!parse_number(cells[2], c) || c < 1) fail(number, "bad color \"" + cells[2] + "\"");
    p.color = ColorId{c};
    points.push_back(p);
  }
  if (!header) throw ParseError("line 1: missing header \"x,y,color\"");
  try {
    return PointSet(std::move(points));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

PointSet read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return read_instance(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what());
  }
}

void write_instance(std::ostream& out, std::span<const ColoredPoint> points) {
  out << "x,y,color\n";
  auto put = [&](double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, ptr - buf);
  };
  for (const auto& p : points) {
    put(p.x);
    out << ',';
    put(p.y);
    out << ',' << p.color.value << '\n';
  }
}

}  // namespace rba::cli
