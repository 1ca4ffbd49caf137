#pragma once

// Brute-force reference implementations for the test suites. These are kept
// deliberately independent of the library code paths they check: plain
// nested vectors, Gauss-Jordan inverses, textbook density formulas.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace naive {

using Mat = std::vector<std::vector<double>>;
using Vec = std::vector<double>;

inline Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  Mat c(n, Vec(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

inline Vec matvec(const Mat& a, const Vec& x) {
  Vec y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

// Gauss-Jordan with partial pivoting; returns the inverse.
inline Mat inverse(Mat a) {
  const std::size_t n = a.size();
  Mat inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) throw std::runtime_error("naive::inverse: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const double scale = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

// Determinant by LU with partial pivoting.
inline double det(Mat a) {
  const std::size_t n = a.size();
  double result = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (a[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[col], a[pivot]);
      result = -result;
    }
    result *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= factor * a[col][j];
    }
  }
  return result;
}

inline double gaussian_logpdf(const Vec& x, const Vec& mean, const Mat& cov) {
  const std::size_t p = x.size();
  const Mat cov_inv = inverse(cov);
  Vec diff(p);
  for (std::size_t j = 0; j < p; ++j) diff[j] = x[j] - mean[j];
  double quad = 0.0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) quad += diff[i] * cov_inv[i][j] * diff[j];
  return -0.5 * (p * std::log(2.0 * std::numbers::pi) + std::log(det(cov)) + quad);
}

inline double gaussian_pdf(const Vec& x, const Vec& mean, const Mat& cov) {
  return std::exp(gaussian_logpdf(x, mean, cov));
}

// Pair-counting adjusted Rand index, O(n^2).
inline double ari(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size();
  double both = 0.0, in_a = 0.0, in_b = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same_a = a[i] == a[j];
      const bool same_b = b[i] == b[j];
      if (same_a && same_b) both += 1.0;
      if (same_a) in_a += 1.0;
      if (same_b) in_b += 1.0;
    }
  const double pairs = 0.5 * n * (n - 1);
  const double expected = in_a * in_b / pairs;
  const double max_index = 0.5 * (in_a + in_b);
  if (max_index - expected == 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if ((a[i] == a[j]) != (b[i] == b[j])) return 0.0;
    return 1.0;
  }
  return (both - expected) / (max_index - expected);
}

}  // namespace naive
