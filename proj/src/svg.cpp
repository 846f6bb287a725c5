#include "polycenter/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace polycenter::svg {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct View {
  double min_x, max_y, scale;
  double size = 480;
  double margin = 20;

  double x(double px) const { return margin + (px - min_x) * scale; }
  double y(double py) const { return margin + (max_y - py) * scale; }
};

}  // namespace

std::string render(const Scene& scene) {
  const Polygon& p = scene.polygon;
  double min_x = p[0].x, max_x = p[0].x, min_y = p[0].y, max_y = p[0].y;
  const auto include = [&](Point q) {
    min_x = std::min(min_x, q.x);
    max_x = std::max(max_x, q.x);
    min_y = std::min(min_y, q.y);
    max_y = std::max(max_y, q.y);
  };
  for (Point v : p.vertices()) include(v);
  for (const LabelledPoint& c : scene.centers) include(c.point);
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
  min_x -= 0.1 * extent;
  max_y += 0.1 * extent;
  View view{min_x, max_y, 0.0};
  view.scale = view.size / (1.2 * extent);
  const double total = view.size + 2 * view.margin;
  const double unit = 1.2 * extent / view.size;  // world length of one pixel

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(total) +
                    "\" height=\"" + fmt(total) + "\" viewBox=\"0 0 " + fmt(total) + " " +
                    fmt(total) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const RealizedLine& line : scene.lines) {
    if (!line.is_line()) {
      out += "<circle cx=\"" + fmt(view.x(line.point.x)) + "\" cy=\"" + fmt(view.y(line.point.y)) +
             "\" r=\"6\" fill=\"none\" stroke=\"steelblue\"/>\n";
      continue;
    }
    const double reach = 2 * extent;
    const Point a = line.point - reach * line.direction;
    const Point b = line.point + reach * line.direction;
    out += "<line x1=\"" + fmt(view.x(a.x)) + "\" y1=\"" + fmt(view.y(a.y)) + "\" x2=\"" +
           fmt(view.x(b.x)) + "\" y2=\"" + fmt(view.y(b.y)) +
           "\" stroke=\"steelblue\" stroke-dasharray=\"6 4\"/>\n";
  }

  out += "<polygon fill=\"#eef3f8\" stroke=\"black\" points=\"";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += (i ? " " : "") + fmt(view.x(p[i].x)) + "," + fmt(view.y(p[i].y));
  }
  out += "\"/>\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += "<text x=\"" + fmt(view.x(p[i].x) + 4) + "\" y=\"" + fmt(view.y(p[i].y) - 4) +
           "\" font-size=\"12\">V" + std::to_string(i + 1) + "</text>\n";
  }

  if (scene.diagonal_midpoints && p.size() > 3) {
    const double arm = 4 * unit;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 2; j < p.size(); ++j) {
        if (i == 0 && j == p.size() - 1) continue;
        const Point m = midpoint(p[i], p[j]);
        out += "<path d=\"M" + fmt(view.x(m.x - arm)) + "," + fmt(view.y(m.y - arm)) + " L" +
               fmt(view.x(m.x + arm)) + "," + fmt(view.y(m.y + arm)) + " M" +
               fmt(view.x(m.x - arm)) + "," + fmt(view.y(m.y + arm)) + " L" +
               fmt(view.x(m.x + arm)) + "," + fmt(view.y(m.y - arm)) +
               "\" stroke=\"darkred\"/>\n";
      }
    }
  }

  for (const LabelledPoint& c : scene.centers) {
    out += "<circle cx=\"" + fmt(view.x(c.point.x)) + "\" cy=\"" + fmt(view.y(c.point.y)) +
           "\" r=\"3\" fill=\"darkgreen\"><title>" + c.label + "</title></circle>\n";
  }
  out += "</svg>\n";
  return out;
}

void write(const std::string& path, const Scene& scene) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  f << render(scene);
}

}  // namespace polycenter::svg
