#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "polycenter/corpus.hpp"
#include "polycenter/tangential.hpp"

using namespace polycenter;

namespace {

constexpr double kPi = std::numbers::pi;

Polygon unit_square() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
Polygon triangle345() { return Polygon({{0, 0}, {4, 0}, {0, 3}}); }
Polygon qstar() { return Polygon({{0, 0}, {4, 0}, {5, 3}, {1, 2}}); }

bool near(Point a, Point b, double tol) { return distance(a, b) <= tol; }

ErrorKind kind_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("incircle examples") {
  const Incircle t = incircle(triangle345());
  CHECK(near(t.center, {1, 1}, 1e-12));
  CHECK(t.radius == doctest::Approx(1.0).epsilon(1e-12));
  const Incircle s = incircle(unit_square());
  CHECK(near(s.center, {0.5, 0.5}, 1e-12));
  CHECK(s.radius == doctest::Approx(0.5));
  CHECK(kind_of([] { incircle(Polygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}})); }) == ErrorKind::NotTangential);
  CHECK(kind_of([] { incircle(Polygon({{0, 0}, {4, 0}, {1, 3}, {2, 1}})); }) == ErrorKind::NotConvex);
}

TEST_CASE("tangent length examples") {
  const Polygon t = triangle345();
  const TangentLengths x = tangent_lengths(t, incircle(t));
  CHECK(x.x[0] == doctest::Approx(1.0));
  CHECK(x.x[1] == doctest::Approx(3.0));
  CHECK(x.x[2] == doctest::Approx(2.0));
  const TangentLengths s = tangent_lengths(unit_square(), incircle(unit_square()));
  for (double v : s.x) CHECK(v == doctest::Approx(0.5));
  CHECK(kind_of([] { tangent_lengths(unit_square(), Incircle{{0.5, 0.5}, 0.9}); }) ==
        ErrorKind::NumericallyNegative);
}

TEST_CASE("incenter examples") {
  const CenterEvaluation t = incenter(triangle345());
  CHECK(t.coefficients[0] == doctest::Approx(5.0 / 12).epsilon(1e-14));
  CHECK(t.coefficients[1] == doctest::Approx(3.0 / 12).epsilon(1e-14));
  CHECK(t.coefficients[2] == doctest::Approx(4.0 / 12).epsilon(1e-14));
  CHECK(near(t.point, {1, 1}, 1e-12));
  const CenterEvaluation s = incenter(unit_square());
  for (double w : s.coefficients.weights()) CHECK(w == doctest::Approx(0.25));
  CHECK(kind_of([] { incenter(qstar()); }) == ErrorKind::NotTangential);
}

TEST_CASE("generate_tangential examples") {
  const Polygon eq = generate_tangential(1.0, std::vector<double>{kPi / 2, 7 * kPi / 6, 11 * kPi / 6});
  const double side = distance(eq[0], eq[1]);
  CHECK(side == doctest::Approx(2 * std::sqrt(3.0)));
  CHECK(distance(eq[1], eq[2]) == doctest::Approx(side));
  CHECK(distance(eq[2], eq[0]) == doctest::Approx(side));

  const Polygon sq = generate_tangential(1.0, std::vector<double>{kPi / 4, 3 * kPi / 4, 5 * kPi / 4, 7 * kPi / 4});
  for (std::size_t i = 0; i < 4; ++i) CHECK(distance(sq[i], sq[(i + 1) % 4]) == doctest::Approx(2.0));

  corpus::Rng rng(6);
  const auto angles = corpus::tangent_angles(rng, 6);
  const Incircle inc = incircle(generate_tangential(2.0, angles));
  CHECK(near(inc.center, {0, 0}, 1e-9));
  CHECK(inc.radius == doctest::Approx(2.0));

  CHECK(kind_of([] { generate_tangential(1.0, std::vector<double>{0, 1}); }) == ErrorKind::BadAngles);
  CHECK(kind_of([] { generate_tangential(1.0, std::vector<double>{0, 0.1, 0.2}); }) == ErrorKind::BadAngles);
  CHECK(kind_of([] { generate_tangential(-1.0, std::vector<double>{0, 2, 4}); }) == ErrorKind::BadAngles);
  CHECK(kind_of([] { generate_tangential(1.0, std::vector<double>{2, 1, 4}); }) == ErrorKind::BadAngles);
}

TEST_CASE("tangential corpus round trips") {
  corpus::Rng rng(40);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const double r = corpus::uniform(rng, 0.5, 2.0);
    const Polygon base = generate_tangential(r, corpus::tangent_angles(rng, n));
    const Incircle inc = incircle(base);
    CHECK(near(inc.center, {0, 0}, 1e-9 * base.diameter()));
    CHECK(std::abs(inc.radius - r) <= 1e-9 * base.diameter());
    const TangentLengths x = tangent_lengths(base, inc);
    double weight_sum = 0;
    for (double w : incenter_weights(x)) weight_sum += w;
    CHECK(std::abs(weight_sum - base.perimeter()) <= 1e-9 * base.diameter());

    const Similarity t = corpus::random_similarity(rng);
    const Polygon p = apply_similarity(base, t);
    const Point center = incenter(p).point;
    CHECK(near(center, t.apply(Point{0, 0}), 1e-9 * p.diameter()));
    CHECK(near(incenter(relabel(p, corpus::random_dihedral(rng, n))).point, center, 1e-9 * p.diameter()));
  }
}

TEST_CASE("lamina and boundary centroids") {
  const Polygon t = triangle345();
  CHECK(near(boundary_centroid(t).point, {1.5, 1.0}, 1e-12));
  CHECK(near(lamina_centroid(t).point, {4.0 / 3, 1}, 1e-12));
  const CenterEvaluation b = boundary_centroid(t);
  CHECK(b.coefficients[0] == doctest::Approx(7.0 / 24));
  CHECK(b.coefficients[1] == doctest::Approx(9.0 / 24));
  CHECK(b.coefficients[2] == doctest::Approx(8.0 / 24));

  CHECK(near(boundary_centroid(unit_square()).point, {0.5, 0.5}, 1e-12));
  CHECK(near(lamina_centroid(unit_square()).point, {0.5, 0.5}, 1e-12));
  const Polygon par({{0, 0}, {3, 0}, {4, 2}, {1, 2}});
  const CenterEvaluation pb = boundary_centroid(par);
  CHECK(near(pb.point, {2, 1}, 1e-12));
  for (double w : pb.coefficients.weights()) CHECK(w == doctest::Approx(0.25));
  CHECK(kind_of([] { lamina_centroid(Polygon({{0, 0}, {1, 0}, {2, 0}})); }) == ErrorKind::ZeroArea);

  corpus::Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Polygon p = trial % 2 ? corpus::random_convex(rng, 3 + trial % 6) : corpus::random_polygon(rng, 3 + trial % 6);
    const CenterEvaluation l = lamina_centroid(p);
    CHECK(near(l.point, oracle::lamina_centroid(p), 1e-9 * p.diameter()));
    CHECK(near(weighted_sum(p.vertices(), l.coefficients.weights()), l.point, 1e-9 * p.diameter()));
    CHECK(near(boundary_centroid(p).point, oracle::boundary_centroid(p), 1e-9 * p.diameter()));
  }
}

TEST_CASE("AM collinearity examples") {
  const AmCollinearityReport t = verify_AM_collinearity(triangle345());
  CHECK(t.pass());
  CHECK(near(t.incenter, {1, 1}, 1e-12));
  CHECK(near(t.boundary_centroid, {1.5, 1}, 1e-12));
  CHECK(near(t.lamina_centroid, {4.0 / 3, 1}, 1e-12));
  CHECK(verify_AM_collinearity(unit_square()).pass());
  CHECK(kind_of([] { verify_AM_collinearity(qstar()); }) == ErrorKind::NotTangential);
}

TEST_CASE("parallelogram theorem examples") {
  CHECK(verify_parallelogram_theorem(Polygon({{0, 0}, {3, 0}, {4, 2}, {1, 2}})).pass());
  CHECK(verify_parallelogram_theorem(unit_square()).pass());
  CHECK(kind_of([] { verify_parallelogram_theorem(qstar()); }) == ErrorKind::NotParallelogram);
  const ParallelogramReport q = parallelogram_membership(qstar());
  CHECK(!q.member);
  CHECK(q.opposite_sum_gap == doctest::Approx(std::abs(4 + std::sqrt(5.0) - std::sqrt(10.0) - std::sqrt(17.0))));
}
