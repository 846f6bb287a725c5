#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "polycenter/corpus.hpp"
#include "polycenter/symmetry.hpp"
#include "polycenter/tangential.hpp"

using namespace polycenter;

namespace {

Polygon unit_square() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
Polygon rectangle() { return Polygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}}); }
Polygon qstar() { return Polygon({{0, 0}, {4, 0}, {5, 3}, {1, 2}}); }
Polygon kite() { return Polygon({{0, 0}, {2, -1}, {5, 0}, {2, 1}}); }
Polygon rhombus() { return Polygon({{0, 0}, {2, 1}, {4, 0}, {2, -1}}); }
Polygon isosceles() { return Polygon({{0, 0}, {2, 0}, {1, 2}}); }
Polygon triangle345() { return Polygon({{0, 0}, {4, 0}, {0, 3}}); }

bool near(Point a, Point b, double tol) { return distance(a, b) <= tol; }

std::vector<CenterEvaluation> all_centers(const Polygon& p) {
  std::vector<CenterEvaluation> out;
  for (const std::string& name : builtin_names()) {
    const CenterFunction g = builtin(name);
    if (g.accepts(p)) out.push_back(coordinate_map(g, p));
  }
  return out;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(symmetry_group(unit_square()).order() == 8);
  CHECK(symmetry_group(rectangle()).order() == 4);
  CHECK(symmetry_group(qstar()).order() == 1);
  CHECK(symmetry_group(kite()).order() == 2);
  CHECK(symmetry_group(rhombus()).order() == 4);
  CHECK(symmetry_group(isosceles()).order() == 2);
  CHECK_THROWS_AS(symmetry_group(Polygon({{1, 1}, {1, 1}, {1, 1}})), Error);
}

TEST_CASE("group elements map the polygon onto its relabelling") {
  corpus::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Polygon p = corpus::regular_polygon(rng, 3 + trial % 6);
    const SymmetryGroup g = symmetry_group(p);
    CHECK(g.order() == 2 * p.size());
    CHECK(g.elements.front().relabelling.is_identity());
    for (const SymmetryElement& e : g.elements) {
      const Polygon image = relabel(p, e.relabelling);
      for (std::size_t i = 0; i < p.size(); ++i) CHECK(near(e.motion.apply(p[i]), image[i], 1e-9 * p.diameter()));
    }
  }
}

TEST_CASE("group order is invariant under similarities") {
  corpus::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Polygon p = trial % 4 == 0 ? corpus::kite(rng) : trial % 4 == 1 ? corpus::non_square_rectangle(rng)
                : trial % 4 == 2 ? corpus::isosceles_triangle(rng) : corpus::random_convex(rng, 5);
    const Polygon q = apply_similarity(p, corpus::random_similarity(rng));
    CHECK(symmetry_group(p).order() == symmetry_group(q).order());
  }
}

TEST_CASE("fixed set examples") {
  const FixedSet s = fixed_set(symmetry_group(unit_square()));
  CHECK(s.kind == FixedSet::Kind::Point);
  CHECK(near(s.point, {0.5, 0.5}, 1e-12));

  const FixedSet i = fixed_set(symmetry_group(isosceles()));
  CHECK(i.kind == FixedSet::Kind::Line);
  CHECK(i.line.distance_to({1, 0}) < 1e-12);
  CHECK(i.line.distance_to({1, 5}) < 1e-12);

  CHECK(fixed_set(symmetry_group(qstar())).kind == FixedSet::Kind::WholePlane);

  const FixedSet k = fixed_set(symmetry_group(kite()));
  CHECK(k.kind == FixedSet::Kind::Line);
  CHECK(k.line.distance_to({-3, 0}) < 1e-12);
}

TEST_CASE("fixed set containment examples") {
  for (const Polygon& p : {unit_square(), isosceles(), kite(), rectangle(), qstar(), rhombus()}) {
    const ContainmentReport r = verify_fixed_set_containment(p, all_centers(p));
    CHECK(r.pass());
  }
  const ContainmentReport iso = verify_fixed_set_containment(isosceles(), all_centers(isosceles()));
  CHECK(iso.entries.size() == 4);  // centroid, boundary, incenter, circumcenter
  for (const ContainmentEntry& e : iso.entries) CHECK(std::abs(e.point.x - 1) < 1e-12);
}

TEST_CASE("central vectors") {
  const CentralVectorReport q = central_vectors(qstar());
  REQUIRE(q.vectors.size() == 2);
  CHECK(q.vectors[0].vector.dx == doctest::Approx(0.5));
  CHECK(q.vectors[0].vector.dy == doctest::Approx(1.25));
  CHECK(std::abs(cross(q.vectors[0].vector, q.vectors[1].vector)) > 1e-6);
  CHECK(central_vectors(unit_square()).vectors.empty());
  CHECK(central_vectors(rectangle()).vectors.empty());
}

TEST_CASE("central vectors give distinct centers") {
  corpus::Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Polygon p = trial % 2 ? corpus::random_convex(rng, 3 + trial % 6) : corpus::random_polygon(rng, 3 + trial % 6);
    const CentralVectorReport r = central_vectors(p);
    const Point c = p.vertex_centroid();
    if (!r.vectors.empty()) {
      CHECK(distance(c, c + r.vectors[0].vector) > p.tau());
    }
    if (r.vectors.size() == 2) {
      const std::vector<Point> pts{c, c + r.vectors[0].vector, c + r.vectors[1].vector};
      CHECK(!points_collinear(pts, p.tau() * p.diameter()));
    }
    // a central vector turns with the polygon
    const Similarity t = corpus::random_similarity(rng);
    const CentralVectorReport rt = central_vectors(apply_similarity(p, t));
    REQUIRE(rt.vectors.size() == r.vectors.size());
    for (std::size_t i = 0; i < r.vectors.size(); ++i) {
      const Vector expected = t.apply(r.vectors[i].vector);
      CHECK((rt.vectors[i].vector - expected).norm() <= 1e-9 * t.scale * p.diameter());
    }
  }
}

TEST_CASE("projection of a central vector") {
  const auto v = project_central_vector({1, 1}, {2, 0});
  REQUIRE(v);
  CHECK(v->dx == doctest::Approx(1.0));
  CHECK(v->dy == doctest::Approx(0.0));
  CHECK(!project_central_vector({0, 1}, {1, 0}));
}

TEST_CASE("coincidence and collinearity") {
  const std::vector<CenterEvaluation> rh{coordinate_map(builtin("centroid"), rhombus()),
                                         coordinate_map(builtin("simple_center"), rhombus())};
  CHECK(centers_coincident(rh, rhombus().tau()));

  const Polygon t = triangle345();
  const std::vector<CenterEvaluation> am{incenter(t), boundary_centroid(t), lamina_centroid(t)};
  CHECK(centers_collinear(am, t.tau() * t.diameter()));
  CHECK(!centers_coincident(am, t.tau()));

  const Polygon eq({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
  const std::vector<CenterEvaluation> ec{coordinate_map(builtin("triangle_incenter"), eq),
                                         coordinate_map(builtin("centroid"), eq)};
  CHECK(centers_coincident(ec, eq.tau()));

  const std::vector<CenterEvaluation> one{rh[0]};
  CHECK_THROWS_AS(centers_coincident(one, 1e-9), Error);
  CHECK_THROWS_AS(centers_collinear(rh, 1e-9), Error);
}

TEST_CASE("trigon classification examples") {
  const TrigonClassification e = classify_trigon(Polygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}));
  CHECK(e.metric == TrigonKind::Equilateral);
  CHECK(e.agree());
  CHECK(near(e.centroid, {0.5, std::sqrt(3.0) / 6}, 1e-12));
  CHECK(near(e.incenter, {0.5, std::sqrt(3.0) / 6}, 1e-12));

  const TrigonClassification i = classify_trigon(isosceles());
  CHECK(i.metric == TrigonKind::Isosceles);
  CHECK(i.agree());
  CHECK(std::abs(i.circumcenter.x - 1) < 1e-12);

  const TrigonClassification s = classify_trigon(triangle345());
  CHECK(s.metric == TrigonKind::Scalene);
  CHECK(s.agree());
  CHECK(near(s.centroid, {4.0 / 3, 1}, 1e-12));
  CHECK(near(s.circumcenter, {2, 1.5}, 1e-12));
  CHECK(near(s.incenter, {1, 1}, 1e-12));

  CHECK_THROWS_AS(classify_trigon(Polygon({{0, 0}, {1, 0}, {2, 0}})), Error);
  CHECK_THROWS_AS(classify_trigon(unit_square()), Error);
}

TEST_CASE("trigon classification agrees with independent centers") {
  corpus::Rng rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const Polygon t = trial % 3 == 0 ? corpus::isosceles_triangle(rng) : corpus::random_triangle(rng);
    const TrigonClassification c = classify_trigon(t);
    CHECK(c.agree());
    CHECK(near(c.incenter, oracle::triangle_incenter(t[0], t[1], t[2]), 1e-9 * t.diameter()));
  }
}
