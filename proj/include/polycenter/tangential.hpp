#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polycenter/center.hpp"
#include "polycenter/central_line.hpp"
#include "polycenter/geometry.hpp"

namespace polycenter {

struct Incircle {
  Point center;
  double radius = 0.0;
};

/// x_i: distance from vertex i to the tangency points on its two sides.
struct TangentLengths {
  std::vector<double> x;
};

/// Inscribed circle of a convex polygon, located at the intersection of the
/// internal bisectors at the first two vertices and then checked against
/// every side. Throws NotConvex; returns nullopt when p is not tangential.
std::optional<Incircle> try_incircle(const Polygon& p);

/// As try_incircle, but throws NotTangential instead of returning nullopt.
Incircle incircle(const Polygon& p);

/// x_i = sqrt(|V_i - center|^2 - r^2), checked against d_{i,i+1} = x_i + x_{i+1}.
/// Throws NumericallyNegative or NotTangential.
TangentLengths tangent_lengths(const Polygon& p, const Incircle& inc);

/// Incenter as a center: vertex k weighted by x_{k-1} + x_{k+1}, normalized
/// by their sum (the perimeter). Throws NotTangential.
CenterEvaluation incenter(const Polygon& p);

/// Weights x_{k-1} + x_{k+1}, unnormalized.
std::vector<double> incenter_weights(const TangentLengths& t);

/// Polygon circumscribed about the circle of `radius` centred at the origin;
/// vertex i is where the tangents at angles[i] and angles[i+1] meet. Angles
/// must increase within [0, 2 pi) with every cyclic gap below pi.
/// Throws BadAngles.
Polygon generate_tangential(double radius, std::span<const double> angles);

/// Center of mass of the filled region. Throws ZeroArea (and OutOfDomain
/// for flat polygons).
CenterEvaluation lamina_centroid(const Polygon& p);
Point lamina_centroid_point(const Polygon& p);
double signed_area(const Polygon& p);

/// Center of mass of the perimeter: vertex k weighted by
/// (d_{k-1,k} + d_{k,k+1}) / (2p).
CenterEvaluation boundary_centroid(const Polygon& p);

struct AmCollinearityReport {
  Point incenter, boundary_centroid, lamina_centroid;
  double area = 0.0;       // of the triangle the three points span
  double tolerance = 0.0;  // tolerance_factor * diameter^2
  bool pass() const { return area <= tolerance; }
};

/// Incenter, boundary centroid and lamina centroid of a tangential polygon
/// are collinear. Throws NotTangential.
AmCollinearityReport verify_AM_collinearity(const Polygon& p);

/// The line {g1 - g3 = 0, g2 - g4 = 0} through the centroid and the simple
/// center of a quadrilateral.
LineSystem centroid_simple_center_line();

struct ParallelogramReport {
  CoefficientVector boundary_weights;
  bool member = false;               // coefficient-level membership
  double opposite_sum_gap = 0.0;     // |(d14 + d12) - (d32 + d34)|
  double adjacent_sum_gap = 0.0;     // |(d12 + d32) - (d43 + d41)|
  bool pass() const { return member; }
};

/// Membership of the boundary-centroid weights in the centroid/simple-center
/// line, for any quadrilateral.
ParallelogramReport parallelogram_membership(const Polygon& p);

/// As parallelogram_membership, after checking that p is a parallelogram.
/// Throws NotParallelogram.
ParallelogramReport verify_parallelogram_theorem(const Polygon& p);

}  // namespace polycenter
