#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polycenter/geometry.hpp"

namespace polycenter {

/// Real function g on distance matrices together with its metadata. The
/// center it generates weights vertex k by g evaluated on the matrix
/// relabelled by rho^(k-1), normalized to sum one.
struct CenterFunction {
  using Evaluator = std::function<double(const DistanceMatrix&)>;
  using Domain = std::function<bool(const Polygon&)>;

  std::string name;
  Evaluator evaluate;
  std::optional<int> degree;  // homogeneity degree m, when declared
  Domain domain;              // empty means "every polygon"

  double operator()(const DistanceMatrix& d) const { return evaluate(d); }
  bool accepts(const Polygon& p) const { return !domain || domain(p); }
};

/// Affine weights (lambda_1..lambda_n) summing to one. Different vectors
/// may describe the same point when n > 3.
class CoefficientVector {
 public:
  /// Throws BadWeights unless the weights sum to one within 1e-12.
  explicit CoefficientVector(std::vector<double> weights);

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  std::span<const double> weights() const noexcept { return w_; }

 private:
  std::vector<double> w_;
};

struct CenterEvaluation {
  Point point;
  CoefficientVector coefficients;
  std::string source_name;
};

/// Unnormalized shift weights a_k = g([d_{rho^(k-1)(i) rho^(k-1)(j)}]).
std::vector<double> shift_weights(const CenterFunction& g, const DistanceMatrix& d);

/// Evaluates the center generated by g. Throws OutOfDomain or
/// DegenerateNormalization when the shift weights sum to (nearly) zero.
CenterEvaluation coordinate_map(const CenterFunction& g, const Polygon& p);

/// Built-in catalog: centroid, simple_center, diagonal_crosspoint,
/// boundary_centroid, triangle_incenter, triangle_circumcenter.
/// Throws UnknownName.
CenterFunction builtin(const std::string& name);
std::vector<std::string> builtin_names();
/// Resolves short CLI aliases ("simple", "crosspoint", ...) to catalog names.
std::string canonical_builtin_name(const std::string& name);

struct SymmetryReport {
  bool pass = true;
  double max_violation = 0.0;           // relative to max(|g|) over the pair
  std::vector<std::size_t> failures;    // indices into the samples
};

/// Checks g(d) == g(d permuted by sigma) on each sample.
SymmetryReport verify_symmetry(const CenterFunction& g, std::span<const Polygon> samples);

/// Estimates the homogeneity degree from g(lambda d) / g(d) at lambda = 2, 3.
/// Throws ZeroValue if g vanishes on a sample and Inconsistent if the
/// estimates are not one integer.
int verify_homogeneity(const CenterFunction& g, std::span<const Polygon> samples);

using CenterMap = std::function<Point(const Polygon&)>;

/// Recovers an affine coefficient vector for a black-box center by
/// averaging the three-term expressions at consecutive vertex triples.
CoefficientVector extract_center_function(const CenterMap& center, const Polygon& p);

/// Sum of mu_i * centers_i, both for the points and the coefficient vectors.
CenterEvaluation affine_combination(std::span<const CenterEvaluation> centers,
                                    std::span<const double> mu);

/// Relative tolerance for value comparisons of center functions.
bool values_close(double a, double b);

}  // namespace polycenter
