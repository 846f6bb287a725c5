#include "polycenter/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <numbers>
#include <string>

namespace polycenter {

namespace {

std::atomic<double> g_tolerance_factor{1e-9};

std::size_t wrap(long i, std::size_t n) {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

}  // namespace

double tolerance_factor() noexcept { return g_tolerance_factor.load(); }

void set_tolerance_factor(double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorKind::InvalidInput, "tolerance factor must be positive and finite");
  }
  g_tolerance_factor.store(factor);
}

Vector Vector::normalized() const {
  const double len = norm();
  return {dx / len, dy / len};
}

Point weighted_sum(std::span<const Point> points, std::span<const double> weights) {
  if (points.size() != weights.size()) {
    throw Error(ErrorKind::DimensionMismatch, "weight count differs from point count");
  }
  double x = 0.0;
  double y = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    x += weights[k] * points[k].x;
    y += weights[k] * points[k].y;
  }
  return {x, y};
}

// ---------------------------------------------------------------------------
// Polygon

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw Error(ErrorKind::InvalidInput, "a polygon needs at least 3 vertices");
  }
  for (const Point& v : vertices_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw Error(ErrorKind::InvalidInput, "vertex coordinates must be finite");
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      diameter_ = std::max(diameter_, distance(vertices_[i], vertices_[j]));
    }
  }
}

const Point& Polygon::vertex(long i) const { return vertices_[wrap(i, size())]; }

double Polygon::tau() const noexcept { return tolerance_factor() * diameter_; }

double Polygon::perimeter() const {
  double p = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    p += distance(vertices_[i], vertices_[(i + 1) % size()]);
  }
  return p;
}

Point Polygon::vertex_centroid() const {
  const std::vector<double> w(size(), 1.0 / static_cast<double>(size()));
  return weighted_sum(vertices_, w);
}

// ---------------------------------------------------------------------------
// DistanceMatrix

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), d_(std::move(entries)) {
  if (d_.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "distance matrix must have n*n entries");
  }
  const double scale = max_entry();
  const double tol = tolerance_factor() * scale;
  for (std::size_t i = 0; i < n; ++i) {
    if ((*this)(i, i) != 0.0) {
      throw Error(ErrorKind::InvalidInput, "distance matrix must be hollow");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double dij = (*this)(i, j);
      if (!std::isfinite(dij) || dij < 0.0) {
        throw Error(ErrorKind::InvalidInput, "distances must be finite and non-negative");
      }
      if (dij != (*this)(j, i)) {
        throw Error(ErrorKind::InvalidInput, "distance matrix must be symmetric");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if ((*this)(i, k) > dij + (*this)(j, k) + tol) {
          throw Error(ErrorKind::InvalidInput, "distance matrix violates the triangle inequality");
        }
      }
    }
  }
}

double DistanceMatrix::max_entry() const {
  double m = 0.0;
  for (double v : d_) m = std::max(m, v);
  return m;
}

DistanceMatrix DistanceMatrix::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) {
    throw Error(ErrorKind::DimensionMismatch, "permutation size differs from matrix size");
  }
  std::vector<double> out(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      out[i * n_ + j] = (*this)(perm[i], perm[j]);
    }
  }
  return DistanceMatrix(Unchecked{}, n_, std::move(out));
}

DistanceMatrix DistanceMatrix::scaled(double factor) const {
  std::vector<double> out(d_);
  for (double& v : out) v *= factor;
  return DistanceMatrix(Unchecked{}, n_, std::move(out));
}

DistanceMatrix distance_matrix(const Polygon& p) {
  const std::size_t n = p.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = distance(p[i], p[j]);
    }
  }
  return DistanceMatrix(DistanceMatrix::Unchecked{}, n, std::move(d));
}

// ---------------------------------------------------------------------------
// Dihedral group

std::vector<DihedralElement> DihedralElement::all(std::size_t n) {
  std::vector<DihedralElement> out;
  out.reserve(2 * n);
  for (bool r : {false, true}) {
    for (std::size_t k = 0; k < n; ++k) out.push_back({n, k, r});
  }
  return out;
}

std::size_t DihedralElement::apply(std::size_t i) const {
  const std::size_t base = reflected ? (n - i % n) % n : i % n;
  return (base + rotation) % n;
}

std::vector<std::size_t> DihedralElement::permutation() const {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = apply(i);
  return perm;
}

DihedralElement DihedralElement::inverse() const {
  if (reflected) return *this;  // reflections are involutions
  return {n, (n - rotation) % n, false};
}

DihedralElement operator*(const DihedralElement& a, const DihedralElement& b) {
  if (a.n != b.n) {
    throw Error(ErrorKind::DimensionMismatch, "dihedral elements of different order");
  }
  const std::size_t n = a.n;
  if (!a.reflected) return {n, (a.rotation + b.rotation) % n, b.reflected};
  return {n, (a.rotation + n - b.rotation) % n, !b.reflected};
}

Polygon relabel(const Polygon& p, const DihedralElement& alpha) {
  if (alpha.n != p.size()) {
    throw Error(ErrorKind::DimensionMismatch, "dihedral element order differs from polygon size");
  }
  std::vector<Point> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[alpha.apply(i)];
  return Polygon(std::move(out));
}

// ---------------------------------------------------------------------------
// Similarities

Similarity::Affine Similarity::affine() const {
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  // F^r * R * scale
  double a00 = scale * c, a01 = -scale * s, a10 = scale * s, a11 = scale * c;
  if (orientation_reversing) {
    a10 = -a10;
    a11 = -a11;
  }
  const Vector b{a00 * translation.dx + a01 * translation.dy,
                 a10 * translation.dx + a11 * translation.dy};
  return {a00, a01, a10, a11, b};
}

Similarity Similarity::from_affine(double a00, double a01, double a10, double a11, Vector b) {
  const double det = a00 * a11 - a01 * a10;
  if (!(std::abs(det) > 0.0) || !std::isfinite(det)) {
    throw Error(ErrorKind::InvalidInput, "affine map is singular");
  }
  Similarity t;
  t.scale = std::sqrt(std::abs(det));
  t.orientation_reversing = det < 0.0;
  // Undo F to get s*R.
  const double r00 = a00;
  const double r10 = t.orientation_reversing ? -a10 : a10;
  t.rotation = std::atan2(r10, r00);
  // b = A t  =>  t = A^{-1} b
  t.translation = {(a11 * b.dx - a01 * b.dy) / det, (-a10 * b.dx + a00 * b.dy) / det};
  return t;
}

Point Similarity::apply(Point p) const {
  const Affine a = affine();
  return {a.a00 * p.x + a.a01 * p.y + a.b.dx, a.a10 * p.x + a.a11 * p.y + a.b.dy};
}

Vector Similarity::apply(Vector v) const {
  const Affine a = affine();
  return {a.a00 * v.dx + a.a01 * v.dy, a.a10 * v.dx + a.a11 * v.dy};
}

Similarity Similarity::inverse() const {
  const Affine a = affine();
  const double det = a.a00 * a.a11 - a.a01 * a.a10;
  const double i00 = a.a11 / det, i01 = -a.a01 / det, i10 = -a.a10 / det, i11 = a.a00 / det;
  const Vector ib{-(i00 * a.b.dx + i01 * a.b.dy), -(i10 * a.b.dx + i11 * a.b.dy)};
  return from_affine(i00, i01, i10, i11, ib);
}

Similarity operator*(const Similarity& a, const Similarity& b) {
  const auto x = a.affine();
  const auto y = b.affine();
  return Similarity::from_affine(
      x.a00 * y.a00 + x.a01 * y.a10, x.a00 * y.a01 + x.a01 * y.a11,
      x.a10 * y.a00 + x.a11 * y.a10, x.a10 * y.a01 + x.a11 * y.a11,
      {x.a00 * y.b.dx + x.a01 * y.b.dy + x.b.dx, x.a10 * y.b.dx + x.a11 * y.b.dy + x.b.dy});
}

Polygon apply_similarity(const Polygon& p, const Similarity& t) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (const Point& v : p.vertices()) out.push_back(t.apply(v));
  return Polygon(std::move(out));
}

Similarity find_isometry(const Polygon& p, const Polygon& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::DimensionMismatch, "polygons have different vertex counts");
  }
  const std::size_t n = p.size();
  const double tau = tolerance_factor() * std::max(p.diameter(), q.diameter());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(distance(p[i], p[j]) - distance(q[i], q[j])) > tau) {
        throw Error(ErrorKind::NoIsometry, "distance matrices differ");
      }
    }
  }

  // First vertex pair that is not coincident.
  std::size_t i1 = n;
  for (std::size_t i = 1; i < n; ++i) {
    if (distance(p[0], p[i]) > tau) {
      i1 = i;
      break;
    }
  }
  double a00 = 1, a01 = 0, a10 = 0, a11 = 1;
  if (i1 != n) {
    const Vector u = (p[i1] - p[0]).normalized();
    const Vector w = (q[i1] - q[0]).normalized();
    // Off-line vertex decides the orientation; flat polygons keep the
    // orientation-preserving choice.
    bool reversing = false;
    for (std::size_t i = 1; i < n; ++i) {
      const double cp = cross(u, p[i] - p[0]);
      if (std::abs(cp) > tau) {
        const double cq = cross(w, q[i] - q[0]);
        reversing = (cp > 0) != (cq > 0);
        break;
      }
    }
    if (!reversing) {
      // rotation taking u to w
      const double c = dot(u, w);
      const double s = cross(u, w);
      a00 = c, a01 = -s, a10 = s, a11 = c;
    } else {
      // R(w) * F * R(-u): reflection across the bisector of u and w
      const double c = w.dx * u.dx - w.dy * u.dy;   // cos(angle_w + angle_u)
      const double s = w.dy * u.dx + w.dx * u.dy;   // sin(angle_w + angle_u)
      a00 = c, a01 = s, a10 = s, a11 = -c;
    }
  }
  const Vector b{q[0].x - (a00 * p[0].x + a01 * p[0].y), q[0].y - (a10 * p[0].x + a11 * p[0].y)};
  Similarity t = Similarity::from_affine(a00, a01, a10, a11, b);
  t.scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(t.apply(p[i]), q[i]) > tau) {
      throw Error(ErrorKind::NoIsometry, "vertices cannot be matched by a rigid motion");
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Classification

bool collinear(Point a, Point b, Point c, double scale) {
  // twice the triangle area against tol * scale^2
  return std::abs(cross(b - a, c - a)) <= tolerance_factor() * scale * scale;
}

Classification classify(const Polygon& p) {
  Classification out;
  const std::size_t n = p.size();
  double coord_scale = 0.0;
  for (const Point& v : p.vertices()) {
    coord_scale = std::max({coord_scale, std::abs(v.x), std::abs(v.y)});
  }
  if (p.diameter() <= tolerance_factor() * coord_scale || p.diameter() == 0.0) {
    out.flatness = Flatness::AllCoincident;
    return out;
  }

  // Collinearity against the line through the farthest pair.
  std::size_t a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(p[i], p[j]) > distance(p[a], p[b])) a = i, b = j;
    }
  }
  const Vector axis = (p[b] - p[a]).normalized();
  bool flat = true;
  for (const Point& v : p.vertices()) {
    if (std::abs(cross(axis, v - p[a])) > p.tau()) {
      flat = false;
      break;
    }
  }
  if (flat) {
    out.flatness = Flatness::FlatProper;
    return out;
  }
  out.flatness = Flatness::NonFlat;

  int positive = 0;
  int negative = 0;
  int degenerate = 0;
  double turning = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Vector e1 = p.vertex(static_cast<long>(k)) - p.vertex(static_cast<long>(k) - 1);
    const Vector e2 = p.vertex(static_cast<long>(k) + 1) - p.vertex(static_cast<long>(k));
    const double l1 = e1.norm();
    const double l2 = e2.norm();
    if (l1 <= p.tau() || l2 <= p.tau()) {
      ++degenerate;
      continue;
    }
    const double sine = cross(e1, e2) / (l1 * l2);
    if (std::abs(sine) <= tolerance_factor()) {
      // straight continuation counts as weakly convex, a reversal does not
      if (dot(e1, e2) < 0.0) return out;
      ++degenerate;
    } else if (sine > 0) {
      ++positive;
    } else {
      ++negative;
    }
    turning += std::atan2(cross(e1, e2), dot(e1, e2));
  }
  const bool one_sided = positive == 0 || negative == 0;
  const bool winds_once = std::abs(std::abs(turning) - 2 * std::numbers::pi) < 1e-6;
  out.weakly_convex = one_sided && winds_once;
  out.convex = out.weakly_convex && degenerate == 0;
  return out;
}

}  // namespace polycenter
