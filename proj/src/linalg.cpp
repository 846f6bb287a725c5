#include "polycenter/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polycenter/error.hpp"

namespace polycenter::linalg {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    m.a_.insert(m.a_.end(), r.begin(), r.end());
  }
  return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

void Matrix::append_row(std::span<const double> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
  a_.insert(a_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::augmented(std::span<const double> column) const {
  if (column.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
  Matrix out(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    out(r, cols_) = column[r];
  }
  return out;
}

std::size_t rank(const Matrix& m, double rel_tol) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> col_order(cols);
  std::iota(col_order.begin(), col_order.end(), 0);
  double first_pivot = 0.0;
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    std::size_t pr = r, pc = r;
    double best = 0.0;
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t j = r; j < cols; ++j) {
        if (std::abs(a(i, col_order[j])) > best) {
          best = std::abs(a(i, col_order[j]));
          pr = i;
          pc = j;
        }
      }
    }
    if (r == 0) first_pivot = best;
    if (best == 0.0 || best < rel_tol * first_pivot) break;
    std::swap(col_order[r], col_order[pc]);
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pr, j));
    const std::size_t c = col_order[r];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const double f = a(i, c) / a(r, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
      a(i, c) = 0.0;
    }
  }
  return r;
}

namespace {

struct Echelon {
  Matrix a;
  std::vector<std::size_t> pivot_cols;  // pivot column of row r
};

// Reduced row echelon form of the first `cols` columns; remaining columns
// ride along.
Echelon rref(Matrix a, std::size_t cols, double threshold) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.rows(); ++c) {
    std::size_t pr = r;
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (std::abs(a(i, c)) > std::abs(a(pr, c))) pr = i;
    }
    if (std::abs(a(pr, c)) <= threshold) {
      for (std::size_t i = r; i < a.rows(); ++i) a(i, c) = 0.0;
      continue;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pr, j));
    const double piv = a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) /= piv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const double f = a(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
      a(i, c) = 0.0;
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.a = std::move(a);
  return e;
}

std::vector<std::vector<double>> free_basis(const Echelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<double>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<double> v(cols, 0.0);
    v[f] = 1.0;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<double>> null_space(const Matrix& m, double rel_tol) {
  const Echelon e = rref(m, m.cols(), rel_tol * m.max_abs());
  return free_basis(e, m.cols());
}

Solution solve(const Matrix& m, std::span<const double> b, double rel_tol) {
  const Matrix aug = m.augmented(b);
  const double threshold = rel_tol * aug.max_abs();
  const Echelon e = rref(aug, m.cols(), threshold);
  Solution s;
  s.rank = e.pivot_cols.size();
  s.consistent = true;
  for (std::size_t r = s.rank; r < aug.rows(); ++r) {
    if (std::abs(e.a(r, m.cols())) > threshold) s.consistent = false;
  }
  if (!s.consistent) return s;
  s.particular.assign(m.cols(), 0.0);
  for (std::size_t r = 0; r < s.rank; ++r) s.particular[e.pivot_cols[r]] = e.a(r, m.cols());
  s.null_space = free_basis(e, m.cols());
  return s;
}

std::vector<std::vector<double>> orthonormalize(const std::vector<std::vector<double>>& vectors,
                                                double rel_tol) {
  std::vector<std::vector<double>> basis;
  double scale = 0.0;
  for (const auto& v : vectors) {
    scale = std::max(scale, std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0)));
  }
  for (auto v : vectors) {
    for (const auto& q : basis) {
      const double proj = std::inner_product(v.begin(), v.end(), q.begin(), 0.0);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * q[i];
    }
    const double len = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    if (len <= rel_tol * scale || len == 0.0) continue;
    for (double& x : v) x /= len;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace polycenter::linalg
