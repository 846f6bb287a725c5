#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace polycenter::linalg {

/// Small dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  std::vector<std::vector<double>> to_rows() const;

  double max_abs() const;
  void append_row(std::span<const double> values);
  /// New matrix with `column` appended on the right.
  Matrix augmented(std::span<const double> column) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

/// Numerical rank by Gaussian elimination with complete pivoting. A pivot
/// counts only if it is at least rel_tol times the first (largest) pivot.
std::size_t rank(const Matrix& m, double rel_tol);

/// Basis of the null space {x : m x = 0} from the reduced row echelon form,
/// computed with partial pivoting; pivots below rel_tol * max|entry| are
/// treated as zero. One basis vector per free column.
std::vector<std::vector<double>> null_space(const Matrix& m, double rel_tol);

struct Solution {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<double> particular;                 // free variables set to 0
  std::vector<std::vector<double>> null_space;    // homogeneous directions
};

/// Solves m x = b by row reduction of the augmented system with partial
/// pivoting; threshold rel_tol * max|entry of [m | b]|.
Solution solve(const Matrix& m, std::span<const double> b, double rel_tol);

/// Orthonormal basis (modified Gram-Schmidt) of the span of `vectors`;
/// vectors that are dependent within rel_tol are dropped.
std::vector<std::vector<double>> orthonormalize(const std::vector<std::vector<double>>& vectors,
                                                double rel_tol = 1e-12);

}  // namespace polycenter::linalg
