#pragma once

#include <cstddef>
#include <vector>

namespace mpsa {

using Vector = std::vector<double>;

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  const std::vector<double>& entries() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix transpose(const Matrix& a);

// y = A x
Vector matvec(const Matrix& a, const Vector& x);

double max_abs(const Matrix& a);
double frobenius_norm(const Matrix& a);
double trace(const Matrix& a);

bool all_finite(const Matrix& a);
bool all_finite(const Vector& v);

// max|A - A^T| <= rel_tol * max|A| (zero matrices count as symmetric)
bool is_symmetric(const Matrix& a, double rel_tol = 1e-10);

}  // namespace mpsa
