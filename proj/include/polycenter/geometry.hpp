#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polycenter/error.hpp"

namespace polycenter {

// Base relative tolerance. Geometric comparisons on a polygon use
// tolerance_factor() * diameter; value comparisons use it relative to the
// magnitude being compared.
double tolerance_factor() noexcept;
void set_tolerance_factor(double factor);

struct Vector {
  double dx = 0.0;
  double dy = 0.0;

  double norm() const { return std::hypot(dx, dy); }
  Vector normalized() const;

  friend Vector operator+(Vector a, Vector b) { return {a.dx + b.dx, a.dy + b.dy}; }
  friend Vector operator-(Vector a, Vector b) { return {a.dx - b.dx, a.dy - b.dy}; }
  friend Vector operator*(double s, Vector v) { return {s * v.dx, s * v.dy}; }
  friend Vector operator-(Vector v) { return {-v.dx, -v.dy}; }
  friend bool operator==(const Vector&, const Vector&) = default;
};

inline double dot(Vector a, Vector b) { return a.dx * b.dx + a.dy * b.dy; }
inline double cross(Vector a, Vector b) { return a.dx * b.dy - a.dy * b.dx; }

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Vector operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator+(Point p, Vector v) { return {p.x + v.dx, p.y + v.dy}; }
  friend Point operator-(Point p, Vector v) { return {p.x - v.dx, p.y - v.dy}; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) { return (a - b).norm(); }
inline Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

/// Sum of weights[k] * points[k]. The weights are expected to sum to one,
/// but that is not checked here.
Point weighted_sum(std::span<const Point> points, std::span<const double> weights);

/// Ordered, labelled n-gon (n >= 3). Coincident and collinear vertices are
/// allowed; operations that need more reject their inputs themselves.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  /// Cyclic access; any integer index is reduced mod n.
  const Point& vertex(long i) const;
  std::span<const Point> vertices() const noexcept { return vertices_; }

  /// Largest pairwise vertex distance.
  double diameter() const noexcept { return diameter_; }
  /// tolerance_factor() * diameter().
  double tau() const noexcept;
  double perimeter() const;
  Point vertex_centroid() const;

  friend bool operator==(const Polygon& a, const Polygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<Point> vertices_;
  double diameter_ = 0.0;
};

/// Hollow symmetric matrix of pairwise distances, indexed from 0.
class DistanceMatrix {
 public:
  /// Validates hollowness, symmetry and the triangle inequality.
  DistanceMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  double max_entry() const;

  /// Entry (i,j) of the result is entry (perm[i], perm[j]) of this matrix.
  DistanceMatrix permuted(std::span<const std::size_t> perm) const;
  DistanceMatrix scaled(double factor) const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  struct Unchecked {};
  DistanceMatrix(Unchecked, std::size_t n, std::vector<double> entries)
      : n_(n), d_(std::move(entries)) {}
  friend DistanceMatrix distance_matrix(const Polygon& p);

  std::size_t n_;
  std::vector<double> d_;
};

DistanceMatrix distance_matrix(const Polygon& p);

/// Element rho^k * sigma^r of the dihedral group D_n acting on vertex
/// labels, where rho(i) = i+1 and sigma(i) = n+2-i (mod n, 1-based).
/// With 0-based labels: apply(i) = ((r ? -i : i) + k) mod n.
struct DihedralElement {
  std::size_t n = 3;
  std::size_t rotation = 0;
  bool reflected = false;

  static DihedralElement identity(std::size_t n) { return {n, 0, false}; }
  static DihedralElement rho(std::size_t n) { return {n, 1 % n, false}; }
  static DihedralElement sigma(std::size_t n) { return {n, 0, true}; }
  /// All 2n elements: rotations first, then reflections.
  static std::vector<DihedralElement> all(std::size_t n);

  std::size_t apply(std::size_t i) const;
  std::vector<std::size_t> permutation() const;
  bool is_identity() const { return rotation == 0 && !reflected; }
  DihedralElement inverse() const;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

/// Function composition: (a * b)(i) = a(b(i)).
DihedralElement operator*(const DihedralElement& a, const DihedralElement& b);

/// Vertex i of the result is vertex alpha(i) of p. Note that
/// relabel(relabel(p, a), b) == relabel(p, a * b).
Polygon relabel(const Polygon& p, const DihedralElement& alpha);

/// Plane similarity applied as
///   T(x) = F^r * R(rotation) * (scale * (x + translation)),
/// i.e. translate, then scale, then rotate, then (optionally) reflect
/// across the x-axis.
struct Similarity {
  double scale = 1.0;
  double rotation = 0.0;
  Vector translation{};
  bool orientation_reversing = false;

  static Similarity identity() { return {}; }

  /// Recovers the similarity x -> A x + b; A must be a nonzero multiple of
  /// an orthogonal matrix (given row-major as a00, a01, a10, a11).
  static Similarity from_affine(double a00, double a01, double a10, double a11, Vector b);

  Point apply(Point p) const;
  Vector apply(Vector v) const;  // linear part only
  Similarity inverse() const;

  struct Affine {
    double a00, a01, a10, a11;
    Vector b;
  };
  Affine affine() const;
};

/// (a * b)(x) = a(b(x)).
Similarity operator*(const Similarity& a, const Similarity& b);

Polygon apply_similarity(const Polygon& p, const Similarity& t);

/// Scale-1 similarity mapping p's vertices onto q's, index by index.
/// Throws DimensionMismatch or NoIsometry.
Similarity find_isometry(const Polygon& p, const Polygon& q);

enum class Flatness { AllCoincident, FlatProper, NonFlat };

struct Classification {
  Flatness flatness = Flatness::NonFlat;
  /// Strictly convex: every turn has the same sign, none is degenerate, and
  /// the boundary winds exactly once.
  bool convex = false;
  /// Convex except that some consecutive triples may be collinear.
  bool weakly_convex = false;
};

Classification classify(const Polygon& p);

/// True when a, b, c are collinear within tolerance relative to the scale.
bool collinear(Point a, Point b, Point c, double scale);

}  // namespace polycenter
