#include "polycenter/tangential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polycenter {

std::optional<Incircle> try_incircle(const Polygon& p) {
  const Classification cls = classify(p);
  if (cls.flatness != Flatness::NonFlat || !cls.convex) {
    throw Error(ErrorKind::NotConvex, "incircle needs a convex, non-flat polygon");
  }
  const std::size_t n = p.size();
  const double tau = p.tau();
  const auto bisector = [&](long k) {
    return (p.vertex(k - 1) - p.vertex(k)).normalized() + (p.vertex(k + 1) - p.vertex(k)).normalized();
  };
  const Vector b0 = bisector(0);
  const Vector b1 = bisector(1);
  const double denom = cross(b0, b1);
  if (denom == 0.0) return std::nullopt;
  const double s = cross(p[1] - p[0], b1) / denom;
  const Point c = p[0] + s * b0;

  const double orientation = signed_area(p) > 0 ? 1.0 : -1.0;
  std::vector<double> dist(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vector e = p[(k + 1) % n] - p[k];
    const double len = e.norm();
    const double signed_dist = cross(e, c - p[k]) / len;
    if (orientation * signed_dist <= 0) return std::nullopt;  // outside
    dist[k] = std::abs(signed_dist);
    const double foot = dot(c - p[k], e) / len;
    if (foot < -tau || foot > len + tau) return std::nullopt;
  }
  const auto [lo, hi] = std::minmax_element(dist.begin(), dist.end());
  if (*hi - *lo > tau) return std::nullopt;
  double r = 0.0;
  for (double d : dist) r += d;
  return Incircle{c, r / static_cast<double>(n)};
}

Incircle incircle(const Polygon& p) {
  if (auto inc = try_incircle(p)) return *inc;
  throw Error(ErrorKind::NotTangential, "polygon admits no inscribed circle");
}

TangentLengths tangent_lengths(const Polygon& p, const Incircle& inc) {
  const std::size_t n = p.size();
  const double tau = p.tau();
  TangentLengths t;
  t.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector v = p[i] - inc.center;
    const double sq = dot(v, v) - inc.radius * inc.radius;
    if (sq < 0.0) {
      if (sq < -tau * p.diameter()) {
        throw Error(ErrorKind::NumericallyNegative, "vertex lies inside the circle");
      }
      t.x[i] = 0.0;
    } else {
      t.x[i] = std::sqrt(sq);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double side = distance(p[i], p[(i + 1) % n]);
    if (std::abs(side - t.x[i] - t.x[(i + 1) % n]) > tau) {
      throw Error(ErrorKind::NotTangential, "tangent lengths do not add up to the sides");
    }
  }
  return t;
}

std::vector<double> incenter_weights(const TangentLengths& t) {
  const std::size_t n = t.x.size();
  std::vector<double> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = t.x[(k + n - 1) % n] + t.x[(k + 1) % n];
  return w;
}

CenterEvaluation incenter(const Polygon& p) {
  std::optional<Incircle> inc;
  try {
    inc = try_incircle(p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotConvex) throw;
  }
  if (!inc) throw Error(ErrorKind::NotTangential, "incenter needs a tangential polygon");
  std::vector<double> w = incenter_weights(tangent_lengths(p, *inc));
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  CoefficientVector lambda(std::move(w));
  const Point point = weighted_sum(p.vertices(), lambda.weights());
  return {point, std::move(lambda), "incenter"};
}

Polygon generate_tangential(double radius, std::span<const double> angles) {
  const std::size_t n = angles.size();
  if (n < 3) throw Error(ErrorKind::BadAngles, "need at least three tangent angles");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::BadAngles, "radius must be positive");
  }
  constexpr double two_pi = 2 * std::numbers::pi;
  for (double a : angles) {
    if (!(a >= 0.0 && a < two_pi)) throw Error(ErrorKind::BadAngles, "angles must lie in [0, 2pi)");
  }
  std::vector<Point> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double next = i + 1 < n ? angles[i + 1] : angles[0] + two_pi;
    const double gap = next - angles[i];
    if (!(gap > 0.0 && gap < std::numbers::pi)) {
      throw Error(ErrorKind::BadAngles, "angles must increase with gaps below pi");
    }
    const double mid = angles[i] + gap / 2;
    const double reach = radius / std::cos(gap / 2);
    vertices.push_back({reach * std::cos(mid), reach * std::sin(mid)});
  }
  return Polygon(std::move(vertices));
}

double signed_area(const Polygon& p) {
  double twice = 0.0;
  const Point o = p[0];
  for (std::size_t i = 0; i < p.size(); ++i) {
    twice += cross(p[i] - o, p[(i + 1) % p.size()] - o);
  }
  return twice / 2;
}

Point lamina_centroid_point(const Polygon& p) {
  if (classify(p).flatness != Flatness::NonFlat) {
    throw Error(ErrorKind::ZeroArea, "flat polygon has no lamina centroid");
  }
  const Point o = p[0];
  double twice_area = 0.0;
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vector a = p[i] - o;
    const Vector b = p[(i + 1) % p.size()] - o;
    const double w = cross(a, b);
    twice_area += w;
    cx += w * (a.dx + b.dx);
    cy += w * (a.dy + b.dy);
  }
  if (std::abs(twice_area) <= 2 * tolerance_factor() * p.diameter() * p.diameter()) {
    throw Error(ErrorKind::ZeroArea, "polygon encloses no area");
  }
  return {o.x + cx / (3 * twice_area), o.y + cy / (3 * twice_area)};
}

CenterEvaluation lamina_centroid(const Polygon& p) {
  const Point point = lamina_centroid_point(p);
  return {point, extract_center_function(lamina_centroid_point, p), "lamina_centroid"};
}

CenterEvaluation boundary_centroid(const Polygon& p) {
  return coordinate_map(builtin("boundary_centroid"), p);
}

AmCollinearityReport verify_AM_collinearity(const Polygon& p) {
  AmCollinearityReport r;
  try {
    r.incenter = incenter(p).point;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotConvex) throw Error(ErrorKind::NotTangential, e.what());
    throw;
  }
  r.boundary_centroid = boundary_centroid(p).point;
  r.lamina_centroid = lamina_centroid_point(p);
  r.area = std::abs(cross(r.boundary_centroid - r.incenter, r.lamina_centroid - r.incenter)) / 2;
  r.tolerance = tolerance_factor() * p.diameter() * p.diameter();
  return r;
}

LineSystem centroid_simple_center_line() {
  return {4, {{1, 0, -1, 0}, {0, 1, 0, -1}}};
}

ParallelogramReport parallelogram_membership(const Polygon& p) {
  if (p.size() != 4) throw Error(ErrorKind::InvalidInput, "parallelogram check needs n = 4");
  const CenterEvaluation b = boundary_centroid(p);
  const double d12 = distance(p[0], p[1]), d23 = distance(p[1], p[2]);
  const double d34 = distance(p[2], p[3]), d41 = distance(p[3], p[0]);
  ParallelogramReport r{b.coefficients};
  r.member = contains(centroid_simple_center_line(), p, b.coefficients);
  r.opposite_sum_gap = std::abs((d41 + d12) - (d23 + d34));
  r.adjacent_sum_gap = std::abs((d12 + d23) - (d34 + d41));
  return r;
}

ParallelogramReport verify_parallelogram_theorem(const Polygon& p) {
  if (p.size() != 4 || ((p[1] - p[0]) - (p[2] - p[3])).norm() > p.tau() ||
      classify(p).flatness != Flatness::NonFlat) {
    throw Error(ErrorKind::NotParallelogram, "polygon is not a parallelogram");
  }
  return parallelogram_membership(p);
}

}  // namespace polycenter
