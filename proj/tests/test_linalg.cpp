#include <doctest.h>

#include <cmath>

#include "polycenter/linalg.hpp"

using namespace polycenter::linalg;

namespace {

double residual(const Matrix& m, const std::vector<double>& x) {
  double worst = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * x[c];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(Matrix{{1, 2}, {2, 4}}, 1e-9) == 1);
  CHECK(rank(Matrix{{1, 0, 0}, {0, 1, 0}}, 1e-9) == 2);
  CHECK(rank(Matrix{{1, 1, 1, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}}, 1e-9) == 3);
  CHECK(rank(Matrix{{1, 1}, {1, 1 + 1e-13}}, 1e-9) == 1);
  CHECK(rank(Matrix(2, 3), 1e-9) == 0);
}

TEST_CASE("null space") {
  const Matrix m{{1, 1, 1, 1}, {0.25, 0.25, 0.25, 0.25}};
  const auto ns = null_space(m, 1e-10);
  CHECK(ns.size() == 3);
  for (const auto& v : ns) CHECK(residual(m, v) < 1e-14);

  const Matrix full{{2, 1}, {1, 3}};
  CHECK(null_space(full, 1e-10).empty());
}

TEST_CASE("solve") {
  const Matrix m{{1, 1, 1, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}};
  const std::vector<double> b{1, 0, 0};
  const Solution s = solve(m, b, 1e-9);
  CHECK(s.consistent);
  CHECK(s.rank == 3);
  CHECK(s.null_space.size() == 1);
  CHECK(s.particular[0] + s.particular[1] + s.particular[2] + s.particular[3] == doctest::Approx(1.0));

  const Solution bad = solve(Matrix{{1, 1}, {2, 2}}, std::vector<double>{1, 3}, 1e-9);
  CHECK(!bad.consistent);
}

TEST_CASE("orthonormalize drops dependent vectors") {
  const auto q = orthonormalize({{1, 0, -1, 0}, {2, 0, -2, 0}, {0, 1, 0, -1}});
  CHECK(q.size() == 2);
  double d = 0;
  for (std::size_t i = 0; i < 4; ++i) d += q[0][i] * q[1][i];
  CHECK(std::abs(d) < 1e-15);
}
