#pragma once

#include <string>

#include <json.hpp>

#include "polycenter/center.hpp"
#include "polycenter/central_line.hpp"
#include "polycenter/geometry.hpp"
#include "polycenter/symmetry.hpp"
#include "polycenter/tangential.hpp"

// JSON encodings. Output numbers are rounded to 12 significant digits and
// object keys keep insertion order, so equal inputs give identical text.
namespace polycenter::io {

using Json = nlohmann::ordered_json;

double round12(double v);

/// Compact serialization with every floating-point number printed by %.12g.
std::string dump(const Json& j);

/// {"n": int, "vertices": [[x, y], ...]}; throws InvalidInput.
Polygon polygon_from_json(const Json& j);
Json to_json(const Polygon& p);
Polygon read_polygon_file(const std::string& path);

/// {"n": int, "A": [[...], ...]}; throws InvalidInput.
LineSystem line_system_from_json(const Json& j);
Json to_json(const LineSystem& line);
LineSystem read_line_system_file(const std::string& path);

Json read_json_file(const std::string& path);

Json to_json(Point p);
Json to_json(Vector v);
Json to_json(const CoefficientVector& c);
Json to_json(const CenterEvaluation& e);
Json to_json(const RealizedLine& line);
Json to_json(const Incircle& inc);
Json to_json(const FixedSet& f);
Json to_json(const CentralVectorReport& r);
Json to_json(const ContainmentReport& r);
Json to_json(const TrigonClassification& t);
Json to_json(const AmCollinearityReport& r);
Json to_json(const ParallelogramReport& r);
Json to_json(const RectangleCounterexampleReport& r);

Json error_json(const Error& e);

}  // namespace polycenter::io
