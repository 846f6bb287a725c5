#include "polycenter/central_line.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polycenter {

linalg::Matrix LineSystem::stacked() const {
  linalg::Matrix m;
  m.append_row(std::vector<double>(n, 1.0));
  for (const auto& row : A) m.append_row(row);
  return m;
}

void validate(const LineSystem& line) {
  if (line.n < 3) throw Error(ErrorKind::InvalidInput, "line system needs n >= 3");
  if (line.A.size() != line.n - 2) {
    throw Error(ErrorKind::InvalidInput, "line system needs exactly n-2 rows besides the normalization");
  }
  for (const auto& row : line.A) {
    if (row.size() != line.n) throw Error(ErrorKind::InvalidInput, "line system row has wrong length");
    for (double v : row) {
      if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "line system entries must be finite");
    }
  }
  if (linalg::rank(line.stacked(), kRankPivotTolerance) != line.n - 1) {
    throw Error(ErrorKind::InvalidInput, "line system must have rank n-1");
  }
}

RealizedLine RealizedLine::line(Point through, Vector direction, Point anchor) {
  Vector d = direction.normalized();
  if (d.dx < 0 || (d.dx == 0 && d.dy < 0)) d = -d;
  const Point foot = through + dot(anchor - through, d) * d;
  return {Kind::Line, foot, d};
}

double RealizedLine::distance_to(Point q) const {
  if (kind == Kind::SinglePoint) return polycenter::distance(point, q);
  return std::abs(cross(direction, q - point));
}

bool same_set(const RealizedLine& a, const RealizedLine& b, double tau) {
  if (a.kind != b.kind) return false;
  if (!a.is_line()) return distance(a.point, b.point) <= tau;
  if (a.distance_to(b.point) > tau || b.distance_to(a.point) > tau) return false;
  return std::abs(cross(a.direction, b.direction)) <= tolerance_factor();
}

LineSystem kimberling_line(const CenterFunction& g1, const CenterFunction& g2, const Polygon& p) {
  const CenterEvaluation c1 = coordinate_map(g1, p);
  const CenterEvaluation c2 = coordinate_map(g2, p);
  const std::size_t n = p.size();
  linalg::Matrix weights;
  weights.append_row(c1.coefficients.weights());
  weights.append_row(c2.coefficients.weights());
  if (linalg::rank(weights, kRankPivotTolerance) < 2) {
    throw Error(ErrorKind::CoincidentCenters,
                g1.name + " and " + g2.name + " have proportional weight vectors");
  }
  LineSystem line{n, linalg::null_space(weights, kBasisPivotTolerance)};
  if (line.A.size() != n - 2 || linalg::rank(line.stacked(), kRankPivotTolerance) != n - 1) {
    throw Error(ErrorKind::CoincidentCenters, "weight vectors do not span a plane");
  }
  return line;
}

RealizedLine realize(const LineSystem& line, const Polygon& p) {
  if (line.n != p.size()) throw Error(ErrorKind::DimensionMismatch, "line system and polygon differ in n");
  std::vector<double> rhs(line.n - 1, 0.0);
  rhs[0] = 1.0;
  const linalg::Solution s = linalg::solve(line.stacked(), rhs, kBasisPivotTolerance);
  if (!s.consistent) throw Error(ErrorKind::Infeasible, "line system is inconsistent");
  if (s.null_space.size() > 1) {
    throw Error(ErrorKind::InvalidInput, "line system is underdetermined (rank below n-1)");
  }
  const Point through = weighted_sum(p.vertices(), s.particular);
  if (s.null_space.empty()) return RealizedLine::single_point(through);

  std::vector<double> v = s.null_space.front();
  double largest = 0.0;
  for (double x : v) largest = std::max(largest, std::abs(x));
  for (double& x : v) x /= largest;
  // sum v = 0, so this is a pure direction
  const Point tip = weighted_sum(p.vertices(), v);
  const Vector dir{tip.x, tip.y};
  if (dir.norm() <= p.tau()) return RealizedLine::single_point(through);
  return RealizedLine::line(through, dir, p.vertex_centroid());
}

bool contains(const LineSystem& line, const Polygon& p, const CoefficientVector& lambda) {
  if (line.n != p.size() || lambda.size() != p.size()) {
    throw Error(ErrorKind::DimensionMismatch, "line system, polygon and weights differ in n");
  }
  const std::size_t n = p.size();
  // Centered and diameter-scaled vertices keep all rows O(1).
  const Point c = p.vertex_centroid();
  const double scale = p.diameter() > 0 ? p.diameter() : 1.0;
  std::vector<double> xs(n), ys(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = (p[k].x - c.x) / scale;
    ys[k] = (p[k].y - c.y) / scale;
  }
  linalg::Matrix m = line.stacked();
  m.append_row(xs);
  m.append_row(ys);
  std::vector<double> rhs(m.rows(), 0.0);
  rhs[0] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    rhs[m.rows() - 2] += lambda[k] * xs[k];
    rhs[m.rows() - 1] += lambda[k] * ys[k];
  }
  return linalg::rank(m, kRankPivotTolerance) == linalg::rank(m.augmented(rhs), kRankPivotTolerance);
}

RealizedLine line_through(Point a, Point b, double tau) {
  if (distance(a, b) <= tau) return RealizedLine::single_point(a);
  return RealizedLine::line(a, b - a, midpoint(a, b));
}

// ---------------------------------------------------------------------------
// Rectangle counterexample

namespace {

struct RectangleShape {
  bool first_pair_longer;  // sides V1V2 and V3V4 are the long ones
};

RectangleShape check_rectangle(const Polygon& p) {
  if (p.size() != 4) throw Error(ErrorKind::NotARectangle, "a rectangle has 4 vertices");
  const double tau = p.tau();
  const Vector s0 = p[1] - p[0], s1 = p[2] - p[1], s2 = p[3] - p[2], s3 = p[0] - p[3];
  const double l0 = s0.norm(), l1 = s1.norm();
  if (l0 <= tau || l1 <= tau) throw Error(ErrorKind::NotARectangle, "degenerate sides");
  if ((s0 + s2).norm() > tau || (s1 + s3).norm() > tau) {
    throw Error(ErrorKind::NotARectangle, "opposite sides are not equal and parallel");
  }
  if (std::abs(dot(s0, s1)) > tolerance_factor() * l0 * l1) {
    throw Error(ErrorKind::NotARectangle, "adjacent sides are not perpendicular");
  }
  if (std::abs(l0 - l1) <= tau) throw Error(ErrorKind::NotARectangle, "squares are excluded");
  return {l0 > l1};
}

std::vector<Similarity> default_similarities() {
  return {
      {2.0, std::numbers::pi / 6, {1.0, -2.0}, false},
      {0.5, -1.1, {-3.0, 0.25}, true},
      {3.7, 2.9, {0.0, 5.0}, false},
      {1.0, 0.0, {0.0, 0.0}, true},
  };
}

}  // namespace

RealizedLine rectangle_median(const Polygon& p) {
  const RectangleShape shape = check_rectangle(p);
  const Point a = shape.first_pair_longer ? midpoint(p[0], p[1]) : midpoint(p[1], p[2]);
  const Point b = shape.first_pair_longer ? midpoint(p[2], p[3]) : midpoint(p[3], p[0]);
  return RealizedLine::line(a, b - a, p.vertex_centroid());
}

RectangleCounterexampleReport is_central_line_counterexample_rectangle(
    const Polygon& p, std::span<const Similarity> similarities) {
  RectangleCounterexampleReport report;
  report.median = rectangle_median(p);
  report.center = midpoint(p[0], p[2]);

  std::vector<Similarity> sims(similarities.begin(), similarities.end());
  if (sims.empty()) sims = default_similarities();
  report.equivariant = true;
  for (const Similarity& t : sims) {
    const Polygon q = apply_similarity(p, t);
    const RealizedLine mapped =
        RealizedLine::line(t.apply(report.median.point), t.apply(report.median.direction), q.vertex_centroid());
    if (!same_set(rectangle_median(q), mapped, q.tau())) report.equivariant = false;
  }

  report.relabel_invariant = true;
  for (const DihedralElement& alpha : DihedralElement::all(4)) {
    if (!same_set(rectangle_median(relabel(p, alpha)), report.median, p.tau())) {
      report.relabel_invariant = false;
    }
  }

  report.centers_coincide = true;
  for (const std::string& name : builtin_names()) {
    const CenterFunction g = builtin(name);
    if (!g.accepts(p)) continue;
    report.centers.push_back(coordinate_map(g, p));
    if (distance(report.centers.back().point, report.center) > p.tau()) {
      report.centers_coincide = false;
    }
  }
  return report;
}

}  // namespace polycenter
