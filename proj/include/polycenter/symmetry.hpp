#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polycenter/center.hpp"
#include "polycenter/central_line.hpp"
#include "polycenter/geometry.hpp"

namespace polycenter {

struct SymmetryElement {
  DihedralElement relabelling;
  Similarity motion;  // scale 1, maps p onto relabel(p, relabelling)
};

struct SymmetryGroup {
  std::vector<SymmetryElement> elements;  // identity first
  double tau = 0.0;                       // of the polygon it came from
  std::size_t order() const { return elements.size(); }
};

/// Relabellings alpha whose distance matrix matches p's and that are
/// realized by a rigid motion. Throws Degenerate for all-coincident p.
SymmetryGroup symmetry_group(const Polygon& p);

struct FixedSet {
  enum class Kind { WholePlane, Line, Point };
  Kind kind = Kind::WholePlane;
  RealizedLine line;   // kind == Line
  Point point;         // kind == Point

  bool contains(Point q, double tau) const;
};

FixedSet fixed_set(const SymmetryGroup& group);

struct CentralVector {
  Vector vector;
  std::string provenance;
};

struct CentralVectorReport {
  std::vector<CentralVector> vectors;      // at most 2, linearly independent
  std::vector<CentralVector> projections;  // projection of the first onto the second's direction
};

/// Sufficient conditions for central vectors: a unique longest or shortest
/// side, a unique largest or smallest interior angle (convex only), and
/// for two independent vectors the convex-scalene and convex
/// all-angles-distinct constructions with their second-largest fallback.
CentralVectorReport central_vectors(const Polygon& p);

/// Projection of v onto the line spanned by `direction`; nullopt when they
/// are perpendicular within tolerance.
std::optional<Vector> project_central_vector(Vector v, Vector direction);

/// Point-level tests; tau is the absolute distance tolerance. Throw TooFew.
bool centers_coincident(std::span<const CenterEvaluation> evals, double tau);
bool centers_collinear(std::span<const CenterEvaluation> evals, double area_tolerance);
bool points_collinear(std::span<const Point> points, double area_tolerance);

enum class TrigonKind { Equilateral, Isosceles, Scalene };
std::string_view to_string(TrigonKind kind) noexcept;

struct TrigonClassification {
  TrigonKind metric = TrigonKind::Scalene;   // from side lengths
  TrigonKind by_centers = TrigonKind::Scalene;
  Point centroid, circumcenter, incenter;
  double area = 0.0;  // of the centroid/circumcenter/incenter triangle
  bool agree() const { return metric == by_centers; }
};

/// Relative area tolerance (times diameter^2) for the center-based test.
inline constexpr double kTrigonAreaTolerance = 1e-8;

/// Throws FlatTrigon (and InvalidInput when n != 3).
TrigonClassification classify_trigon(const Polygon& p);

struct ContainmentEntry {
  std::string name;
  Point point;
  double distance = 0.0;  // from the fixed set
  bool inside = false;
};

struct ContainmentReport {
  FixedSet fixed;
  std::size_t group_order = 0;
  std::vector<ContainmentEntry> entries;
  bool pass() const;
};

ContainmentReport verify_fixed_set_containment(const Polygon& p,
                                               std::span<const CenterEvaluation> evals);

}  // namespace polycenter
