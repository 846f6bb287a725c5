#pragma once

#include <string>
#include <vector>

#include "polycenter/central_line.hpp"
#include "polycenter/geometry.hpp"

namespace polycenter::svg {

struct LabelledPoint {
  std::string label;
  Point point;
};

struct Scene {
  Polygon polygon;
  std::vector<LabelledPoint> centers;  // drawn as filled dots
  std::vector<RealizedLine> lines;     // clipped to the view box
  bool diagonal_midpoints = false;     // midpoints of all diagonals, marked with x
};

std::string render(const Scene& scene);
/// Throws InvalidInput if the file cannot be written.
void write(const std::string& path, const Scene& scene);

}  // namespace polycenter::svg
