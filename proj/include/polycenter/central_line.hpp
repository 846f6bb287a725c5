#pragma once

#include <span>
#include <string>
#include <vector>

#include "polycenter/center.hpp"
#include "polycenter/geometry.hpp"
#include "polycenter/linalg.hpp"

namespace polycenter {

/// Central line in coefficient space: the n-2 rows of A together with the
/// implicit normalization row (1,...,1) whose right-hand side is 1; all
/// other right-hand sides are 0.
struct LineSystem {
  std::size_t n = 0;
  std::vector<std::vector<double>> A;

  /// [ones; A], the (n-1) x n coefficient matrix.
  linalg::Matrix stacked() const;
};

/// Pivot threshold, relative to the largest entry, for the complement basis.
inline constexpr double kBasisPivotTolerance = 1e-10;
/// Relative pivot threshold for rank decisions in membership tests.
inline constexpr double kRankPivotTolerance = 1e-9;

/// Validates dimensions and the rank n-1 contract; throws InvalidInput.
void validate(const LineSystem& line);

struct RealizedLine {
  enum class Kind { Line, SinglePoint };
  Kind kind = Kind::SinglePoint;
  Point point;
  Vector direction;  // unit length when kind == Line

  static RealizedLine single_point(Point p) { return {Kind::SinglePoint, p, {}}; }
  /// Canonical form: `direction` normalized with a positive leading
  /// component and `point` the foot of the perpendicular from `anchor`.
  static RealizedLine line(Point through, Vector direction, Point anchor);

  bool is_line() const { return kind == Kind::Line; }
  double distance_to(Point q) const;
};

/// Same point set within tolerance: parallel lines at distance <= tau, or
/// points within tau.
bool same_set(const RealizedLine& a, const RealizedLine& b, double tau);

/// Rows spanning the orthogonal complement of span{a1, a2}, where a_m are
/// the normalized shift-weight vectors of g1 and g2 on p. Throws
/// OutOfDomain or CoincidentCenters.
LineSystem kimberling_line(const CenterFunction& g1, const CenterFunction& g2, const Polygon& p);

/// Image of the solution set of the system under x -> sum x_k V_k.
/// Throws Infeasible.
RealizedLine realize(const LineSystem& line, const Polygon& p);

/// Whether sum lambda_k V_k lies on the line: consistency of the system
/// extended by the two coordinate equations sum (x_k - lambda_k) V_k = 0.
bool contains(const LineSystem& line, const Polygon& p, const CoefficientVector& lambda);

/// Line through two points, or a single point when they agree within tau.
RealizedLine line_through(Point a, Point b, double tau);

struct RectangleCounterexampleReport {
  RealizedLine median;          // median crossing the longest sides
  Point center;                 // intersection of the diagonals
  bool equivariant = false;     // median commutes with the tested similarities
  bool relabel_invariant = false;
  bool centers_coincide = false;
  std::vector<CenterEvaluation> centers;
  bool pass() const { return equivariant && relabel_invariant && centers_coincide; }
};

/// Median of a non-square rectangle through the midpoints of its longest
/// sides. Throws NotARectangle.
RealizedLine rectangle_median(const Polygon& p);

/// Checks the median against both central-line axioms and that every
/// applicable built-in center sits at the rectangle's center. When
/// `similarities` is empty a fixed set of test similarities is used.
RectangleCounterexampleReport is_central_line_counterexample_rectangle(
    const Polygon& p, std::span<const Similarity> similarities = {});

}  // namespace polycenter
