#include <doctest.h>

#include <cmath>

#include "polycenter/corpus.hpp"
#include "polycenter/dsl.hpp"

using namespace polycenter;

namespace {

const char* const kCrosspoint =
    "sqrt(4*pow(d(3,4),2)*pow(d(2,4),2) - pow(pow(d(3,4),2)+pow(d(2,4),2)-pow(d(2,3),2),2))"
    " + sqrt(4*pow(d(2,3),2)*pow(d(2,4),2) - pow(pow(d(2,3),2)+pow(d(2,4),2)-pow(d(3,4),2),2))";

Polygon qstar() { return Polygon({{0, 0}, {4, 0}, {5, 3}, {1, 2}}); }
Polygon unit_square() { return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

ErrorKind kind_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

// Closed form of the crosspoint function from the three distances it uses.
double crosspoint_closed_form(double d34, double d24, double d23) {
  const double a = d34 * d34, b = d24 * d24, c = d23 * d23;
  return std::sqrt(4 * a * b - (a + b - c) * (a + b - c)) + std::sqrt(4 * c * b - (c + b - a) * (c + b - a));
}

}  // namespace

TEST_CASE("parse examples") {
  const dsl::ExprPtr one = dsl::parse("1", 4);
  REQUIRE(std::holds_alternative<dsl::Expr::Number>(one->node()));
  CHECK(std::get<dsl::Expr::Number>(one->node()).value == 1.0);

  const dsl::ExprPtr d = dsl::parse(" d( 1 , 3 ) ", 4);
  REQUIRE(std::holds_alternative<dsl::Expr::Distance>(d->node()));
  CHECK(std::get<dsl::Expr::Distance>(d->node()).i == 1);
  CHECK(std::get<dsl::Expr::Distance>(d->node()).j == 3);

  CHECK_NOTHROW(dsl::parse(kCrosspoint, 4));
  CHECK(dsl::print(*dsl::parse("1 - 2 - 3", 4)) == "((1 - 2) - 3)");
  CHECK(dsl::print(*dsl::parse("1 + 2 * 3", 4)) == "(1 + (2 * 3))");
  CHECK(dsl::print(*dsl::parse("-d(1,2)*2", 4)) == "(-(d(1,2)) * 2)");
  CHECK(dsl::evaluate(*dsl::parse("2.5e1 + .5", 3), distance_matrix(unit_square())) == 25.5);
}

TEST_CASE("parse errors") {
  CHECK(kind_of([] { dsl::parse("d(1,5)", 4); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { dsl::parse("d(0,1)", 4); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { dsl::parse("1 +", 4); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { dsl::parse("foo(1)", 4); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { dsl::parse("(1", 4); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { dsl::parse("pow(2, 1.5)", 4); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { dsl::parse("1 2", 4); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([] { dsl::parse("", 4); }) == ErrorKind::SyntaxError);
  try {
    dsl::parse("1 + * 2", 4);
    FAIL("expected a syntax error");
  } catch (const dsl::SyntaxError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("evaluate examples") {
  const DistanceMatrix sq = distance_matrix(unit_square());
  CHECK(dsl::evaluate(*dsl::parse("1", 4), sq) == 1.0);
  CHECK(dsl::evaluate(*dsl::parse("d(1,3)", 4), sq) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  const double g = dsl::evaluate(*dsl::parse(kCrosspoint, 4), distance_matrix(qstar()));
  CHECK(g == doctest::Approx(crosspoint_closed_form(std::sqrt(17.0), std::sqrt(13.0), std::sqrt(10.0))).epsilon(1e-13));
  CHECK(g == doctest::Approx(44.0).epsilon(1e-13));

  CHECK(kind_of([&] { dsl::evaluate(*dsl::parse("sqrt(0 - 1)", 4), sq); }) == ErrorKind::NegativeSqrt);
  CHECK(kind_of([&] { dsl::evaluate(*dsl::parse("1 / (d(1,2) - d(2,3))", 4), sq); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { dsl::evaluate(*dsl::parse("pow(d(1,2) - d(2,3), -1)", 4), sq); }) == ErrorKind::DivisionByZero);
  // rounding-level negative radicand clamps to zero
  CHECK(dsl::evaluate(*dsl::parse("sqrt(pow(d(1,3),2) - 2)", 4), sq) >= 0.0);
}

TEST_CASE("parse and print round trip") {
  const char* sources[] = {"1", "d(1,3)", kCrosspoint, "-(-d(1,2))", "pow(d(1,2)/3.25e-3, -2) - sqrt(2)",
                           "0.1 + 1e300 * d(2,4)"};
  for (const char* s : sources) {
    const dsl::ExprPtr e = dsl::parse(s, 4);
    CHECK_MESSAGE(*dsl::parse(dsl::print(*e), 4) == *e, s);
  }
  corpus::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    // random expression trees
    std::function<std::string(int)> gen = [&](int depth) -> std::string {
      const int pick = depth > 3 ? static_cast<int>(corpus::uniform(rng, 0, 2)) : static_cast<int>(corpus::uniform(rng, 0, 7));
      switch (pick) {
        case 0: return std::to_string(corpus::uniform(rng, 0, 10));
        case 1: return "d(" + std::to_string(1 + trial % 4) + "," + std::to_string(1 + (trial / 4) % 4) + ")";
        case 2: return "(" + gen(depth + 1) + "+" + gen(depth + 1) + ")";
        case 3: return gen(depth + 1) + "*" + gen(depth + 1);
        case 4: return "-" + gen(depth + 1);
        case 5: return "sqrt(" + gen(depth + 1) + ")";
        default: return "pow(" + gen(depth + 1) + "," + std::to_string(static_cast<int>(corpus::uniform(rng, -3, 4))) + ")";
      }
    };
    const std::string s = gen(0);
    const dsl::ExprPtr e = dsl::parse(s, 4);
    CHECK_MESSAGE(*dsl::parse(dsl::print(*e), 4) == *e, s);
  }
}

TEST_CASE("index shifting matches matrix shifting") {
  corpus::Rng rng(8);
  const dsl::ExprPtr e = dsl::parse("d(1,2) * d(2,4) + pow(d(3,4), 2) - d(1,3) / 7", 4);
  for (int trial = 0; trial < 50; ++trial) {
    const Polygon p = corpus::random_polygon(rng, 4);
    const DistanceMatrix d = distance_matrix(p);
    const DihedralElement a = corpus::random_dihedral(rng, 4);
    const auto perm = a.permutation();
    CHECK(dsl::evaluate(*e, d.permuted(perm)) ==
          doctest::Approx(dsl::evaluate(*dsl::permute_indices(e, perm), d)).epsilon(1e-14));
  }
}

TEST_CASE("compile examples") {
  const dsl::DslCenterFunction d13 = dsl::compile(dsl::parse("d(1,3)", 4), 4);
  CHECK(d13.verified_symmetry);
  CHECK(d13.estimated_degree == 1);

  const dsl::DslCenterFunction cp = dsl::compile(dsl::parse(kCrosspoint, 4), 4);
  CHECK(cp.verified_symmetry);
  CHECK(cp.estimated_degree == 2);
  const Point x = coordinate_map(cp.function, qstar()).point;
  CHECK(distance(x, {40.0 / 19, 24.0 / 19}) < 1e-12);

  try {
    dsl::compile(dsl::parse("d(1,2)", 4), 4);
    FAIL("expected SymmetryViolation");
  } catch (const dsl::SymmetryViolation& v) {
    CHECK(v.kind() == ErrorKind::SymmetryViolation);
    CHECK(v.witness().size() == 4);
    const DistanceMatrix w = distance_matrix(v.witness());
    CHECK(v.value() == doctest::Approx(w(0, 1)));
    CHECK(v.sigma_value() == doctest::Approx(w(0, 3)));
  }

  CHECK(kind_of([] { dsl::compile(dsl::parse("d(1,3) + pow(d(1,3),2)", 4), 4); }) == ErrorKind::DegreeInconsistent);
  CHECK(kind_of([] { dsl::compile(dsl::parse("0", 4), 4); }) == ErrorKind::ZeroValue);
}

TEST_CASE("compiled constant reproduces the centroid") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const dsl::DslCenterFunction one = dsl::compile(dsl::parse("1", n), n);
    CHECK(one.estimated_degree == 0);
    for (const Polygon& p : corpus::verification_corpus(n)) {
      const CenterEvaluation a = coordinate_map(one.function, p);
      const CenterEvaluation b = coordinate_map(builtin("centroid"), p);
      CHECK(a.point == b.point);
    }
  }
}
