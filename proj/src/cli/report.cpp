#include <cmath>

#include <json.hpp>

#include "rba/cli.hpp"

namespace rba::cli {

namespace {

using nlohmann::json;

json coord(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

double coord(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("report: missing \"") + key + "\"");
  const json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v == "+inf" || v == "inf") return kInf;
  if (v == "-inf") return -kInf;
  throw ParseError(std::string("report: bad value for \"") + key + "\"");
}

json box(const Box& b) {
  return {{"left", coord(b.left)}, {"right", coord(b.right)}, {"bottom", coord(b.bottom)}, {"top", coord(b.top)}};
}

Box box(const json& j) {
  return Box{coord(j, "left"), coord(j, "right"), coord(j, "bottom"), coord(j, "top")};
}

const char* kCorridorNames[] = {"down-right", "down-left", "up-right", "up-left"};

json geometry(const Annulus& a) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Strip>) {
          return {{"orientation", s.orientation == StripOrientation::Vertical ? "vertical" : "horizontal"},
                  {"lo", s.lo},
                  {"hi", s.hi}};
        } else if constexpr (std::is_same_v<T, LCorridor>) {
          return {{"orientation", kCorridorNames[static_cast<int>(s.orientation)]},
                  {"corner_x", coord(s.corner_x)},
                  {"corner_y", coord(s.corner_y)},
                  {"width", s.width}};
        } else if constexpr (std::is_same_v<T, SquareAnnulus>) {
          return {{"outer", box(s.outer)}, {"delta", s.delta}};
        } else if constexpr (std::is_same_v<T, RectAnnulus>) {
          return {{"outer", box(s.outer)}, {"inner", box(s.inner)}};
        } else {
          return {{"center_x", s.center_x}, {"center_y", s.center_y}, {"r_in", s.r_in}, {"r_out", s.r_out}};
        }
      },
      a);
}

Annulus geometry(Shape shape, const json& g) {
  switch (shape) {
    case Shape::Strip: {
      const std::string o = g.at("orientation").get<std::string>();
      if (o != "vertical" && o != "horizontal") throw ParseError("report: bad strip orientation");
      return Strip{o == "vertical" ? StripOrientation::Vertical : StripOrientation::Horizontal,
                   coord(g, "lo"), coord(g, "hi")};
    }
    case Shape::LCorridor: {
      const std::string o = g.at("orientation").get<std::string>();
      for (int i = 0; i < 4; ++i)
        if (o == kCorridorNames[i])
          return LCorridor{static_cast<CorridorOrientation>(i), coord(g, "corner_x"), coord(g, "corner_y"),
                           coord(g, "width")};
      throw ParseError("report: bad corridor orientation");
    }
    case Shape::Square:
      return SquareAnnulus{box(g.at("outer")), coord(g, "delta")};
    case Shape::Rect:
      return RectAnnulus{box(g.at("outer")), box(g.at("inner"))};
    case Shape::Circle:
      return CircularAnnulus{coord(g, "center_x"), coord(g, "center_y"), coord(g, "r_in"), coord(g, "r_out")};
  }
  throw ParseError("report: unknown shape");
}

}  // namespace

std::string report_to_json(const SolutionReport& r) {
  json j = {{"shape", shape_name(r.annulus)},
            {"width", r.width},
            {"geometry", geometry(r.annulus)},
            {"provenance", r.provenance},
            {"elapsed_ms", r.elapsed_ms}};
  return j.dump(2);
}

SolutionReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    const Shape shape = parse_shape(j.at("shape").get<std::string>());
    SolutionReport r{geometry(shape, j.at("geometry")), coord(j, "width"), j.value("provenance", ""),
                     j.value("elapsed_ms", 0.0)};
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::vector<std::string> check_report(const SolutionReport& r, const PointSet& ps) {
  std::vector<std::string> problems;
  const double actual = width_of(r.annulus);
  if (!(std::abs(actual - r.width) <= epsilon() * std::max(1.0, std::abs(actual))))
    problems.push_back("width mismatch: reported " + std::to_string(r.width) + ", geometry gives " +
                       std::to_string(actual));
  const RegionCounts rc = count_regions(r.annulus, ps);
  if (rc.interior > 0) problems.push_back(std::to_string(rc.interior) + " point(s) in the annulus interior");
  if (!is_rainbow(rc.inside)) problems.push_back("inside region is not rainbow");
  if (!is_rainbow(rc.outside)) problems.push_back("outside region is not rainbow");
  if (problems.empty() && !validate_solution(r.annulus, ps)) problems.push_back("annulus is malformed");
  return problems;
}

}  // namespace rba::cli
