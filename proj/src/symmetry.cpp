#include "polycenter/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace polycenter {

namespace {

constexpr double kAngleTieTolerance = 1e-9;  // radians

bool is_identity_motion(const Similarity& t, double tau) {
  const auto a = t.affine();
  const double f = tolerance_factor();
  return std::abs(a.a00 - 1) <= f && std::abs(a.a11 - 1) <= f && std::abs(a.a01) <= f &&
         std::abs(a.a10) <= f && a.b.norm() <= tau;
}

bool same_motion(const Similarity& s, const Similarity& t, double tau) {
  return is_identity_motion(s.inverse() * t, tau);
}

double determinant(const Similarity& t) {
  const auto a = t.affine();
  return a.a00 * a.a11 - a.a01 * a.a10;
}

Point rotation_center(const Similarity& t) {
  const auto a = t.affine();
  // (I - A) c = b
  const double m00 = 1 - a.a00, m01 = -a.a01, m10 = -a.a10, m11 = 1 - a.a11;
  const double det = m00 * m11 - m01 * m10;
  return {(m11 * a.b.dx - m01 * a.b.dy) / det, (-m10 * a.b.dx + m00 * a.b.dy) / det};
}

// Index of the unique maximum of `values` (ties within `tol` disqualify).
std::optional<std::size_t> unique_max(const std::vector<double>& values, double tol) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != best && values[i] >= values[best] - tol) return std::nullopt;
  }
  return best;
}

std::optional<std::size_t> unique_min(const std::vector<double>& values, double tol) {
  std::vector<double> neg(values.size());
  std::transform(values.begin(), values.end(), neg.begin(), std::negate<>());
  return unique_max(neg, tol);
}

bool all_distinct(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] <= tol) return false;
  }
  return true;
}

// Index of the second largest value; only meaningful when all are distinct.
std::size_t second_largest(const std::vector<double>& values) {
  std::vector<std::size_t> idx(values.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return values[a] > values[b]; });
  return idx[1];
}

}  // namespace

SymmetryGroup symmetry_group(const Polygon& p) {
  if (classify(p).flatness == Flatness::AllCoincident) {
    throw Error(ErrorKind::Degenerate, "all vertices coincide");
  }
  const std::size_t n = p.size();
  const DistanceMatrix d = distance_matrix(p);
  SymmetryGroup group;
  group.tau = p.tau();
  for (const DihedralElement& alpha : DihedralElement::all(n)) {
    bool invariant = true;
    for (std::size_t i = 0; i < n && invariant; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (std::abs(d(i, j) - d(alpha.apply(i), alpha.apply(j))) > group.tau) {
          invariant = false;
          break;
        }
      }
    }
    if (!invariant) continue;
    try {
      group.elements.push_back({alpha, find_isometry(p, relabel(p, alpha))});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoIsometry) throw;
    }
  }
  return group;
}

bool FixedSet::contains(Point q, double tau) const {
  switch (kind) {
    case Kind::WholePlane:
      return true;
    case Kind::Line:
      return line.distance_to(q) <= tau;
    case Kind::Point:
      return distance(point, q) <= tau;
  }
  return false;
}

FixedSet fixed_set(const SymmetryGroup& group) {
  // Distinct non-identity motions; relabellings of coincident vertices can
  // be realized by the identity motion.
  std::vector<Similarity> motions;
  for (const auto& e : group.elements) {
    if (is_identity_motion(e.motion, group.tau)) continue;
    const bool seen = std::any_of(motions.begin(), motions.end(), [&](const Similarity& m) {
      return same_motion(m, e.motion, group.tau);
    });
    if (!seen) motions.push_back(e.motion);
  }
  FixedSet out;
  if (motions.empty()) return out;

  for (const Similarity& t : motions) {
    if (determinant(t) > 0) {
      out.kind = FixedSet::Kind::Point;
      out.point = rotation_center(t);
      return out;
    }
  }
  if (motions.size() >= 2) {
    // two distinct reflections compose to a rotation
    out.kind = FixedSet::Kind::Point;
    out.point = rotation_center(motions[0] * motions[1]);
    return out;
  }
  const auto a = motions.front().affine();
  const double half = std::atan2(a.a10, a.a00) / 2;
  const Point on_axis{a.b.dx / 2, a.b.dy / 2};
  out.kind = FixedSet::Kind::Line;
  out.line = RealizedLine::line(on_axis, {std::cos(half), std::sin(half)}, on_axis);
  return out;
}

std::optional<Vector> project_central_vector(Vector v, Vector direction) {
  const double len = direction.norm();
  if (len == 0.0) return std::nullopt;
  const Vector u = (1.0 / len) * direction;
  const double c = dot(v, u);
  if (std::abs(c) <= tolerance_factor() * v.norm()) return std::nullopt;
  return c * u;
}

CentralVectorReport central_vectors(const Polygon& p) {
  if (classify(p).flatness == Flatness::AllCoincident) {
    throw Error(ErrorKind::Degenerate, "all vertices coincide");
  }
  const std::size_t n = p.size();
  const double tau = p.tau();
  const Point centroid = p.vertex_centroid();
  const bool convex = classify(p).convex;

  std::vector<double> sides(n), angles(n);
  for (std::size_t k = 0; k < n; ++k) {
    sides[k] = distance(p[k], p[(k + 1) % n]);
    const long i = static_cast<long>(k);
    const Vector u = p.vertex(i - 1) - p.vertex(i);
    const Vector w = p.vertex(i + 1) - p.vertex(i);
    angles[k] = std::atan2(std::abs(cross(u, w)), dot(u, w));
  }
  const auto to_side = [&](std::size_t k) { return midpoint(p[k], p[(k + 1) % n]) - centroid; };
  const auto to_vertex = [&](std::size_t k) { return p[k] - centroid; };

  std::vector<CentralVector> candidates;
  if (auto k = unique_max(sides, tau)) candidates.push_back({to_side(*k), "longest-side"});
  if (auto k = unique_min(sides, tau)) candidates.push_back({to_side(*k), "shortest-side"});
  if (convex) {
    if (auto k = unique_max(angles, kAngleTieTolerance)) {
      candidates.push_back({to_vertex(*k), "largest-angle"});
    }
    if (auto k = unique_min(angles, kAngleTieTolerance)) {
      candidates.push_back({to_vertex(*k), "smallest-angle"});
    }
    if (all_distinct(sides, tau)) {
      candidates.push_back({to_side(second_largest(sides)), "second-longest-side"});
    }
    if (all_distinct(angles, kAngleTieTolerance)) {
      candidates.push_back({to_vertex(second_largest(angles)), "second-largest-angle"});
    }
  }

  CentralVectorReport report;
  for (const CentralVector& c : candidates) {
    if (c.vector.norm() <= tau) continue;
    if (report.vectors.empty()) {
      report.vectors.push_back(c);
      continue;
    }
    const Vector v1 = report.vectors.front().vector;
    if (std::abs(cross(v1, c.vector)) > tolerance_factor() * v1.norm() * c.vector.norm()) {
      report.vectors.push_back(c);
      break;
    }
  }
  if (report.vectors.size() == 2) {
    const CentralVector& a = report.vectors[0];
    const CentralVector& b = report.vectors[1];
    if (auto v = project_central_vector(a.vector, b.vector)) {
      report.projections.push_back({*v, "projection(" + a.provenance + "->" + b.provenance + ")"});
    }
  }
  return report;
}

bool centers_coincident(std::span<const CenterEvaluation> evals, double tau) {
  if (evals.size() < 2) throw Error(ErrorKind::TooFew, "need at least two centers");
  for (std::size_t i = 0; i < evals.size(); ++i) {
    for (std::size_t j = i + 1; j < evals.size(); ++j) {
      if (distance(evals[i].point, evals[j].point) > tau) return false;
    }
  }
  return true;
}

bool points_collinear(std::span<const Point> points, double area_tolerance) {
  if (points.size() < 3) throw Error(ErrorKind::TooFew, "need at least three points");
  std::size_t a = 0, b = 1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (distance(points[i], points[j]) > distance(points[a], points[b])) a = i, b = j;
    }
  }
  for (const Point& c : points) {
    if (std::abs(cross(points[b] - points[a], c - points[a])) / 2 > area_tolerance) return false;
  }
  return true;
}

bool centers_collinear(std::span<const CenterEvaluation> evals, double area_tolerance) {
  std::vector<Point> pts;
  for (const auto& e : evals) pts.push_back(e.point);
  return points_collinear(pts, area_tolerance);
}

std::string_view to_string(TrigonKind kind) noexcept {
  switch (kind) {
    case TrigonKind::Equilateral:
      return "Equilateral";
    case TrigonKind::Isosceles:
      return "Isosceles";
    case TrigonKind::Scalene:
      return "Scalene";
  }
  return "Scalene";
}

TrigonClassification classify_trigon(const Polygon& p) {
  if (p.size() != 3) throw Error(ErrorKind::InvalidInput, "trigon classification needs n = 3");
  if (classify(p).flatness != Flatness::NonFlat) {
    throw Error(ErrorKind::FlatTrigon, "triangle is flat");
  }
  const double tau = p.tau();
  const double a = distance(p[1], p[2]), b = distance(p[0], p[2]), c = distance(p[0], p[1]);
  const int equal_pairs = (std::abs(a - b) <= tau) + (std::abs(b - c) <= tau) + (std::abs(a - c) <= tau);

  TrigonClassification out;
  out.metric = equal_pairs == 3   ? TrigonKind::Equilateral
               : equal_pairs >= 1 ? TrigonKind::Isosceles
                                  : TrigonKind::Scalene;
  out.centroid = coordinate_map(builtin("centroid"), p).point;
  out.circumcenter = coordinate_map(builtin("triangle_circumcenter"), p).point;
  out.incenter = coordinate_map(builtin("triangle_incenter"), p).point;
  out.area = std::abs(cross(out.circumcenter - out.centroid, out.incenter - out.centroid)) / 2;
  const double diam = p.diameter();
  if (distance(out.centroid, out.incenter) <= tau) {
    out.by_centers = TrigonKind::Equilateral;
  } else if (points_collinear(std::vector<Point>{out.centroid, out.circumcenter, out.incenter},
                              kTrigonAreaTolerance * diam * diam)) {
    out.by_centers = TrigonKind::Isosceles;
  } else {
    out.by_centers = TrigonKind::Scalene;
  }
  return out;
}

bool ContainmentReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.inside; });
}

ContainmentReport verify_fixed_set_containment(const Polygon& p,
                                               std::span<const CenterEvaluation> evals) {
  const SymmetryGroup group = symmetry_group(p);
  ContainmentReport report;
  report.fixed = fixed_set(group);
  report.group_order = group.order();
  for (const auto& e : evals) {
    double dist = 0.0;
    if (report.fixed.kind == FixedSet::Kind::Line) dist = report.fixed.line.distance_to(e.point);
    if (report.fixed.kind == FixedSet::Kind::Point) dist = distance(report.fixed.point, e.point);
    report.entries.push_back({e.source_name, e.point, dist, dist <= p.tau()});
  }
  return report;
}

}  // namespace polycenter
