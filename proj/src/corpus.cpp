#include "polycenter/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polycenter/tangential.hpp"

namespace polycenter::corpus {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Polygon normalized(std::vector<Point> pts) {
  const Polygon raw(std::move(pts));
  const double d = raw.diameter();
  return apply_similarity(raw, Similarity{1.0 / d, 0.0, {0, 0}, false});
}

Polygon placed(Rng& rng, std::vector<Point> pts) {
  return apply_similarity(Polygon(std::move(pts)), random_similarity(rng));
}

// Sorted angles in [0, 2pi) whose cyclic gaps all lie in [min_gap, max_gap].
std::vector<double> sorted_angles(Rng& rng, std::size_t n, double min_gap, double max_gap) {
  for (;;) {
    std::vector<double> a(n);
    for (double& x : a) x = uniform(rng, 0.0, kTwoPi);
    std::sort(a.begin(), a.end());
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const double next = i + 1 < n ? a[i + 1] : a[0] + kTwoPi;
      const double gap = next - a[i];
      ok = gap >= min_gap && gap <= max_gap;
    }
    if (ok) return a;
  }
}

}  // namespace

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Similarity random_similarity(Rng& rng) {
  Similarity t;
  t.scale = std::exp(uniform(rng, std::log(0.2), std::log(5.0)));
  t.rotation = uniform(rng, -std::numbers::pi, std::numbers::pi);
  t.translation = {uniform(rng, -10, 10), uniform(rng, -10, 10)};
  t.orientation_reversing = uniform(rng, 0, 1) < 0.5;
  return t;
}

DihedralElement random_dihedral(Rng& rng, std::size_t n) {
  const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<double>(n)));
  return {n, std::min(k, n - 1), uniform(rng, 0, 1) < 0.5};
}

Polygon random_polygon(Rng& rng, std::size_t n) {
  const auto angles = sorted_angles(rng, n, 0.05, std::numbers::pi * 0.9);
  std::vector<Point> pts;
  for (double a : angles) {
    const double r = uniform(rng, 0.2, 1.0);
    pts.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return normalized(std::move(pts));
}

Polygon random_convex(Rng& rng, std::size_t n) {
  const auto angles = sorted_angles(rng, n, 0.15, std::numbers::pi * 0.95);
  const double sx = uniform(rng, 0.4, 1.0);
  const double shear = uniform(rng, -0.5, 0.5);
  std::vector<Point> pts;
  for (double a : angles) {
    const double x = std::cos(a), y = std::sin(a);
    pts.push_back({sx * x + shear * y, y});
  }
  return normalized(std::move(pts));
}

Polygon random_flat(Rng& rng, std::size_t n) {
  const double dir = uniform(rng, 0, kTwoPi);
  const Point origin{uniform(rng, -1, 1), uniform(rng, -1, 1)};
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = uniform(rng, -1, 1);
    pts.push_back({origin.x + t * std::cos(dir), origin.y + t * std::sin(dir)});
  }
  return normalized(std::move(pts));
}

Polygon random_triangle(Rng& rng) {
  for (;;) {
    std::vector<Point> pts;
    for (int i = 0; i < 3; ++i) pts.push_back({uniform(rng, 0, 1), uniform(rng, 0, 1)});
    if (std::abs(cross(pts[1] - pts[0], pts[2] - pts[0])) > 0.02) return Polygon(std::move(pts));
  }
}

Polygon square(Rng& rng) { return placed(rng, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

Polygon non_square_rectangle(Rng& rng) {
  const double w = uniform(rng, 0.2, 1.0);
  double h = uniform(rng, 0.2, 1.0);
  while (std::abs(w - h) < 0.05) h = uniform(rng, 0.2, 1.0);
  return placed(rng, {{0, 0}, {w, 0}, {w, h}, {0, h}});
}

Polygon rhombus(Rng& rng) {
  const double p = uniform(rng, 0.2, 1.0);
  double q = uniform(rng, 0.2, 1.0);
  while (std::abs(p - q) < 0.05) q = uniform(rng, 0.2, 1.0);
  return placed(rng, {{0, 0}, {p, q}, {2 * p, 0}, {p, -q}});
}

Polygon kite(Rng& rng) {
  const double a = uniform(rng, 0.2, 1.0);
  double c = uniform(rng, 0.2, 1.0);
  while (std::abs(a - c) < 0.05) c = uniform(rng, 0.2, 1.0);
  const double b = uniform(rng, 0.2, 1.0);
  return placed(rng, {{0, 0}, {a, -b}, {a + c, 0}, {a, b}});
}

Polygon parallelogram(Rng& rng) {
  for (;;) {
    const Vector u{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    const Vector v{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    if (std::abs(cross(u, v)) < 0.1) continue;
    const Point o{0, 0};
    return placed(rng, {o, o + u, o + u + v, o + v});
  }
}

Polygon isosceles_triangle(Rng& rng) {
  const double w = uniform(rng, 0.2, 1.0);
  double h = uniform(rng, 0.2, 1.5);
  // keep away from the equilateral height
  while (std::abs(h - w * std::sqrt(3.0)) < 0.05) h = uniform(rng, 0.2, 1.5);
  return placed(rng, {{-w, 0}, {w, 0}, {0, h}});
}

Polygon equilateral_triangle(Rng& rng) {
  return placed(rng, {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
}

Polygon regular_polygon(Rng& rng, std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    pts.push_back({std::cos(a), std::sin(a)});
  }
  return placed(rng, std::move(pts));
}

std::vector<double> tangent_angles(Rng& rng, std::size_t n) {
  return sorted_angles(rng, n, 0.05, std::numbers::pi * 0.85);
}

Polygon random_tangential(Rng& rng, std::size_t n) {
  const auto angles = tangent_angles(rng, n);
  const double r = uniform(rng, 0.5, 2.0);
  return apply_similarity(generate_tangential(r, angles), random_similarity(rng));
}

std::vector<Polygon> verification_corpus(std::size_t n, std::uint64_t seed) {
  Rng rng(seed + n);
  std::vector<Polygon> out;
  out.reserve(100);
  for (int i = 0; i < 100; ++i) {
    switch (i % 5) {
      case 0:
      case 1:
        out.push_back(random_convex(rng, n));
        break;
      case 2:
      case 3:
        out.push_back(random_polygon(rng, n));
        break;
      default:
        out.push_back(random_flat(rng, n));
    }
  }
  return out;
}

}  // namespace polycenter::corpus
