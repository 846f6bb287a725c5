#include "polycenter/center.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace polycenter {

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

bool is_nonflat(const Polygon& p) { return classify(p).flatness == Flatness::NonFlat; }

bool not_coincident(const Polygon& p) {
  return classify(p).flatness != Flatness::AllCoincident;
}

// sqrt that forgives radicands a rounding error below zero; `magnitude` is
// the scale of the terms that cancelled to produce `value`.
double clamped_sqrt(double value, double magnitude) {
  if (value >= 0.0) return std::sqrt(value);
  if (value >= -tolerance_factor() * magnitude) return 0.0;
  throw Error(ErrorKind::NegativeSqrt, "negative radicand in center function");
}

// Twice the area of the triangle with sides a, b, c, squared, times 4:
// 4 a^2 b^2 - (a^2 + b^2 - c^2)^2 under a square root.
double crosspoint_term(double a, double b, double c) {
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  const double s = a2 + b2 - c2;
  const double value = 4 * a2 * b2 - s * s;
  const double magnitude = 4 * a2 * b2 + s * s;
  return clamped_sqrt(value, magnitude);
}

CenterFunction make_centroid() {
  return {"centroid", [](const DistanceMatrix&) { return 1.0; }, 0, {}};
}

CenterFunction make_simple_center() {
  return {"simple_center",
          [](const DistanceMatrix& d) {
            const std::size_t n = d.size();
            if (n % 2 != 0) throw Error(ErrorKind::OutOfDomain, "simple center needs even n");
            return d(0, n / 2);
          },
          1, [](const Polygon& p) { return p.size() % 2 == 0; }};
}

CenterFunction make_crosspoint() {
  return {"diagonal_crosspoint",
          [](const DistanceMatrix& d) {
            if (d.size() != 4) throw Error(ErrorKind::OutOfDomain, "crosspoint needs n = 4");
            const double d23 = d(1, 2), d24 = d(1, 3), d34 = d(2, 3);
            return crosspoint_term(d34, d24, d23) + crosspoint_term(d23, d24, d34);
          },
          2,
          [](const Polygon& p) {
            if (p.size() != 4 || !classify(p).convex) return false;
            for (std::size_t skip = 0; skip < 4; ++skip) {
              std::vector<Point> t;
              for (std::size_t i = 0; i < 4; ++i) {
                if (i != skip) t.push_back(p[i]);
              }
              if (collinear(t[0], t[1], t[2], p.diameter())) return false;
            }
            return true;
          }};
}

CenterFunction make_boundary_centroid() {
  return {"boundary_centroid",
          [](const DistanceMatrix& d) {
            const std::size_t n = d.size();
            return (d(n - 1, 0) + d(0, 1)) / 2.0;
          },
          1, not_coincident};
}

CenterFunction make_triangle_incenter() {
  return {"triangle_incenter",
          [](const DistanceMatrix& d) {
            if (d.size() != 3) throw Error(ErrorKind::OutOfDomain, "triangle incenter needs n = 3");
            return d(1, 2);
          },
          1, [](const Polygon& p) { return p.size() == 3 && is_nonflat(p); }};
}

CenterFunction make_triangle_circumcenter() {
  return {"triangle_circumcenter",
          [](const DistanceMatrix& d) {
            if (d.size() != 3) {
              throw Error(ErrorKind::OutOfDomain, "triangle circumcenter needs n = 3");
            }
            const double a2 = d(1, 2) * d(1, 2);
            const double b2 = d(0, 2) * d(0, 2);
            const double c2 = d(0, 1) * d(0, 1);
            return a2 * (b2 + c2 - a2);
          },
          4, [](const Polygon& p) { return p.size() == 3 && is_nonflat(p); }};
}

}  // namespace

bool values_close(double a, double b) {
  return std::abs(a - b) <= tolerance_factor() * std::max(std::abs(a), std::abs(b));
}

CoefficientVector::CoefficientVector(std::vector<double> weights) : w_(std::move(weights)) {
  double sum = 0.0;
  double mass = 0.0;
  for (double w : w_) {
    if (!std::isfinite(w)) throw Error(ErrorKind::BadWeights, "weights must be finite");
    sum += w;
    mass += std::abs(w);
  }
  if (std::abs(sum - 1.0) > 1e-12 * std::max(1.0, mass)) {
    throw Error(ErrorKind::BadWeights, "coefficient vector must sum to 1");
  }
}

std::vector<double> shift_weights(const CenterFunction& g, const DistanceMatrix& d) {
  const std::size_t n = d.size();
  std::vector<double> a(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto perm = DihedralElement{n, k, false}.permutation();
    a[k] = g(d.permuted(perm));
  }
  return a;
}

CenterEvaluation coordinate_map(const CenterFunction& g, const Polygon& p) {
  if (!g.accepts(p)) {
    throw Error(ErrorKind::OutOfDomain, g.name + " is not defined for this polygon");
  }
  std::vector<double> a = shift_weights(g, distance_matrix(p));
  double sum = 0.0;
  double largest = 0.0;
  for (double v : a) {
    sum += v;
    largest = std::max(largest, std::abs(v));
  }
  if (sum == 0.0 || std::abs(sum) <= tolerance_factor() * largest) {
    throw Error(ErrorKind::DegenerateNormalization, g.name + ": shift weights sum to zero");
  }
  for (double& v : a) v /= sum;
  CoefficientVector lambda(std::move(a));
  const Point point = weighted_sum(p.vertices(), lambda.weights());
  return {point, std::move(lambda), g.name};
}

std::vector<std::string> builtin_names() {
  return {"centroid",          "simple_center",     "diagonal_crosspoint",
          "boundary_centroid", "triangle_incenter", "triangle_circumcenter"};
}

std::string canonical_builtin_name(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"simple", "simple_center"},        {"crosspoint", "diagonal_crosspoint"},
      {"boundary", "boundary_centroid"},  {"incenter", "triangle_incenter"},
      {"circumcenter", "triangle_circumcenter"},
  };
  const auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

CenterFunction builtin(const std::string& name) {
  const std::string key = canonical_builtin_name(name);
  if (key == "centroid") return make_centroid();
  if (key == "simple_center") return make_simple_center();
  if (key == "diagonal_crosspoint") return make_crosspoint();
  if (key == "boundary_centroid") return make_boundary_centroid();
  if (key == "triangle_incenter") return make_triangle_incenter();
  if (key == "triangle_circumcenter") return make_triangle_circumcenter();
  throw Error(ErrorKind::UnknownName,
              "unknown center '" + name + "'; known: " + join(builtin_names()));
}

SymmetryReport verify_symmetry(const CenterFunction& g, std::span<const Polygon> samples) {
  SymmetryReport report;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const DistanceMatrix d = distance_matrix(samples[s]);
    const auto sigma = DihedralElement::sigma(d.size()).permutation();
    const double a = g(d);
    const double b = g(d.permuted(sigma));
    const double scale = std::max(std::abs(a), std::abs(b));
    const double violation = scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
    report.max_violation = std::max(report.max_violation, violation);
    if (violation > tolerance_factor()) {
      report.pass = false;
      report.failures.push_back(s);
    }
  }
  return report;
}

int verify_homogeneity(const CenterFunction& g, std::span<const Polygon> samples) {
  std::optional<int> degree;
  for (const Polygon& p : samples) {
    const DistanceMatrix d = distance_matrix(p);
    const double base = g(d);
    if (base == 0.0) throw Error(ErrorKind::ZeroValue, g.name + " vanishes on a sample");
    for (double lambda : {2.0, 3.0}) {
      const double ratio = g(d.scaled(lambda)) / base;
      if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw Error(ErrorKind::Inconsistent, g.name + ": scaling changes the sign of g");
      }
      const double m = std::log(ratio) / std::log(lambda);
      const double rounded = std::round(m);
      if (std::abs(m - rounded) > 1e-6) {
        throw Error(ErrorKind::Inconsistent, g.name + ": non-integer homogeneity estimate");
      }
      if (degree && *degree != static_cast<int>(rounded)) {
        throw Error(ErrorKind::Inconsistent, g.name + ": homogeneity degree varies");
      }
      degree = static_cast<int>(rounded);
    }
  }
  if (!degree) throw Error(ErrorKind::Inconsistent, "no samples to estimate the degree from");
  return *degree;
}

CoefficientVector extract_center_function(const CenterMap& center, const Polygon& p) {
  const std::size_t n = p.size();
  const Classification cls = classify(p);
  if (cls.flatness == Flatness::AllCoincident) {
    return CoefficientVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }
  const Point x = center(p);
  const double tau = p.tau();
  const double diam = p.diameter();

  std::vector<double> sum(n, 0.0);
  std::size_t valid = 0;
  const auto add = [&](long k, double before, double at, double after) {
    sum[(k - 1 + static_cast<long>(n)) % n] += before;
    sum[k] += at;
    sum[(k + 1) % n] += after;
    ++valid;
  };

  if (cls.flatness == Flatness::NonFlat) {
    for (long k = 0; k < static_cast<long>(n); ++k) {
      const Point a = p.vertex(k - 1), b = p.vertex(k), c = p.vertex(k + 1);
      const double det = cross(b - a, c - a);
      if (std::abs(det) <= tolerance_factor() * diam * diam) continue;
      // barycentric coordinates of x in triangle (a, b, c)
      const double mu_b = cross(x - a, c - a) / det;
      const double mu_c = cross(b - a, x - a) / det;
      add(k, 1.0 - mu_b - mu_c, mu_b, mu_c);
    }
  } else {
    // Flat: x must lie on the common line. With mu_{k-1} = mu_{k+1} = t,
    // x - V_k = t (V_{k-1} + V_{k+1} - 2 V_k), solvable only when that
    // vector is nonzero.
    std::size_t far = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (distance(p[0], p[i]) > distance(p[0], p[far])) far = i;
    }
    const Vector axis = (p[far] - p[0]).normalized();
    if (std::abs(cross(axis, x - p[0])) > tau) {
      throw Error(ErrorKind::PointOffLine, "center of a flat polygon is off its line");
    }
    for (long k = 0; k < static_cast<long>(n); ++k) {
      const Point a = p.vertex(k - 1), b = p.vertex(k), c = p.vertex(k + 1);
      const Vector w = (a - b) + (c - b);
      if (w.norm() <= tau) continue;
      const double t = dot(x - b, w) / dot(w, w);
      add(k, t, 1.0 - 2.0 * t, t);
    }
  }
  if (valid == 0) {
    throw Error(ErrorKind::NoValidTriple, "no vertex triple determines the center");
  }
  for (double& s : sum) s /= static_cast<double>(valid);
  return CoefficientVector(std::move(sum));
}

CenterEvaluation affine_combination(std::span<const CenterEvaluation> centers,
                                    std::span<const double> mu) {
  if (centers.empty() || centers.size() != mu.size()) {
    throw Error(ErrorKind::BadWeights, "need one weight per center");
  }
  const double total = std::accumulate(mu.begin(), mu.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorKind::BadWeights, "weights must sum to 1");
  const std::size_t n = centers.front().coefficients.size();
  std::vector<double> w(n, 0.0);
  double x = 0.0, y = 0.0;
  std::string name = "affine(";
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (centers[i].coefficients.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "centers evaluated on different polygons");
    }
    x += mu[i] * centers[i].point.x;
    y += mu[i] * centers[i].point.y;
    for (std::size_t k = 0; k < n; ++k) w[k] += mu[i] * centers[i].coefficients[k];
    name += (i ? "," : "") + centers[i].source_name;
  }
  return {{x, y}, CoefficientVector(std::move(w)), name + ")"};
}

}  // namespace polycenter
