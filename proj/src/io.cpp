#include "polycenter/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace polycenter::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(std::string(what) + " must be finite");
  return v;
}

std::size_t count(const Json& obj, const char* key) {
  if (!obj.contains(key)) bad(std::string("missing \"") + key + "\"");
  const Json& j = obj.at(key);
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    bad(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

Json numbers(std::span<const double> v) {
  Json out = Json::array();
  for (double x : v) out.push_back(round12(x));
  return out;
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string dump(const Json& j) {
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) return "null";
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
      return buf;
    }
    case Json::value_t::array: {
      std::string out = "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? "," : "") + dump(j[i]);
      return out + "]";
    }
    case Json::value_t::object: {
      std::string out = "{";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        out += (first ? "" : ",") + Json(key).dump() + ":" + dump(value);
        first = false;
      }
      return out + "}";
    }
    default:
      return j.dump();
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

Polygon polygon_from_json(const Json& j) {
  if (!j.is_object()) bad("polygon must be a JSON object");
  const std::size_t n = count(j, "n");
  if (n < 3) bad("polygon needs n >= 3");
  if (!j.contains("vertices") || !j.at("vertices").is_array()) bad("missing \"vertices\" array");
  const Json& vs = j.at("vertices");
  if (vs.size() != n) bad("n does not match the number of vertices");
  std::vector<Point> pts;
  for (const Json& v : vs) {
    if (!v.is_array() || v.size() != 2) bad("each vertex must be [x, y]");
    pts.push_back({number(v[0], "coordinate"), number(v[1], "coordinate")});
  }
  return Polygon(std::move(pts));
}

Json to_json(const Polygon& p) {
  Json vs = Json::array();
  for (Point v : p.vertices()) vs.push_back(to_json(v));
  return Json{{"n", p.size()}, {"vertices", vs}};
}

Polygon read_polygon_file(const std::string& path) { return polygon_from_json(read_json_file(path)); }

LineSystem line_system_from_json(const Json& j) {
  if (!j.is_object()) bad("line system must be a JSON object");
  LineSystem line;
  line.n = count(j, "n");
  if (!j.contains("A") || !j.at("A").is_array()) bad("missing \"A\" array");
  for (const Json& row : j.at("A")) {
    if (!row.is_array()) bad("rows of A must be arrays");
    std::vector<double> r;
    for (const Json& x : row) r.push_back(number(x, "entry of A"));
    line.A.push_back(std::move(r));
  }
  validate(line);
  return line;
}

Json to_json(const LineSystem& line) {
  Json rows = Json::array();
  for (const auto& r : line.A) rows.push_back(numbers(r));
  return Json{{"n", line.n}, {"A", rows}};
}

LineSystem read_line_system_file(const std::string& path) {
  return line_system_from_json(read_json_file(path));
}

Json to_json(Point p) { return Json::array({round12(p.x), round12(p.y)}); }
Json to_json(Vector v) { return Json::array({round12(v.dx), round12(v.dy)}); }
Json to_json(const CoefficientVector& c) { return numbers(c.weights()); }

Json to_json(const CenterEvaluation& e) {
  return Json{{"name", e.source_name}, {"point", to_json(e.point)}, {"weights", to_json(e.coefficients)}};
}

Json to_json(const RealizedLine& line) {
  Json j{{"kind", line.is_line() ? "Line" : "SinglePoint"}, {"point", to_json(line.point)}};
  if (line.is_line()) j["direction"] = to_json(line.direction);
  return j;
}

Json to_json(const Incircle& inc) {
  return Json{{"center", to_json(inc.center)}, {"radius", round12(inc.radius)}};
}

Json to_json(const FixedSet& f) {
  switch (f.kind) {
    case FixedSet::Kind::WholePlane:
      return Json{{"kind", "WholePlane"}};
    case FixedSet::Kind::Line:
      return Json{{"kind", "Line"}, {"point", to_json(f.line.point)}, {"direction", to_json(f.line.direction)}};
    case FixedSet::Kind::Point:
      break;
  }
  return Json{{"kind", "Point"}, {"point", to_json(f.point)}};
}

Json to_json(const CentralVectorReport& r) {
  const auto list = [](const std::vector<CentralVector>& vs) {
    Json out = Json::array();
    for (const CentralVector& v : vs) out.push_back(Json{{"vector", to_json(v.vector)}, {"from", v.provenance}});
    return out;
  };
  return Json{{"vectors", list(r.vectors)}, {"projections", list(r.projections)}};
}

Json to_json(const ContainmentReport& r) {
  Json entries = Json::array();
  for (const ContainmentEntry& e : r.entries) {
    entries.push_back(Json{{"name", e.name},
                           {"point", to_json(e.point)},
                           {"distance", round12(e.distance)},
                           {"pass", e.inside}});
  }
  return Json{{"pass", r.pass()},
              {"group_order", r.group_order},
              {"fixed_set", to_json(r.fixed)},
              {"centers", entries}};
}

Json to_json(const TrigonClassification& t) {
  return Json{{"pass", t.agree()},
              {"metric", std::string(to_string(t.metric))},
              {"by_centers", std::string(to_string(t.by_centers))},
              {"centroid", to_json(t.centroid)},
              {"circumcenter", to_json(t.circumcenter)},
              {"incenter", to_json(t.incenter)},
              {"area", round12(t.area)}};
}

Json to_json(const AmCollinearityReport& r) {
  return Json{{"pass", r.pass()},
              {"incenter", to_json(r.incenter)},
              {"boundary_centroid", to_json(r.boundary_centroid)},
              {"lamina_centroid", to_json(r.lamina_centroid)},
              {"area", round12(r.area)},
              {"tolerance", round12(r.tolerance)}};
}

Json to_json(const ParallelogramReport& r) {
  return Json{{"pass", r.pass()},
              {"boundary_weights", to_json(r.boundary_weights)},
              {"member", r.member},
              {"opposite_sum_gap", round12(r.opposite_sum_gap)},
              {"adjacent_sum_gap", round12(r.adjacent_sum_gap)}};
}

Json to_json(const RectangleCounterexampleReport& r) {
  Json centers = Json::array();
  for (const CenterEvaluation& e : r.centers) centers.push_back(to_json(e));
  return Json{{"pass", r.pass()},
              {"median", to_json(r.median)},
              {"center", to_json(r.center)},
              {"equivariant", r.equivariant},
              {"relabel_invariant", r.relabel_invariant},
              {"centers_coincide", r.centers_coincide},
              {"centers", centers}};
}

Json error_json(const Error& e) {
  return Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
}

}  // namespace polycenter::io
