#include "mpsa/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mpsa/errors.hpp"

namespace mpsa {

namespace {

double offdiag_frobenius(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Order eigenpairs by descending eigenvalue; exact ties are ordered by the
// index of the largest-magnitude eigenvector entry (first such index on a
// magnitude tie). The basis within a tie block is rotation-arbitrary, which
// is fine for every consumer: they use projectors or block averages.
void sort_eigenpairs(Vector& values, Matrix& vectors) {
  const std::size_t p = values.size();
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> peak(p, 0);
  for (std::size_t j = 0; j < p; ++j) {
    double best = -1.0;
    for (std::size_t i = 0; i < p; ++i) {
      const double m = std::abs(vectors(i, j));
      if (m > best) {
        best = m;
        peak[j] = i;
      }
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return peak[a] < peak[b];
  });

  Vector sorted_values(p);
  Matrix sorted_vectors(p, p);
  for (std::size_t j = 0; j < p; ++j) {
    const std::size_t src = order[j];
    sorted_values[j] = values[src];
    const double sign = vectors(peak[src], src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < p; ++i) sorted_vectors(i, j) = sign * vectors(i, src);
  }
  values = std::move(sorted_values);
  vectors = std::move(sorted_vectors);
}

}  // namespace

SpectralDecomposition sym_eig(const Matrix& input) {
  if (input.rows() != input.cols()) throw InputError("sym_eig: matrix is not square");
  if (!all_finite(input)) throw InputError("sym_eig: matrix has non-finite entries");
  if (!is_symmetric(input)) throw InputError("sym_eig: matrix is not symmetric");

  const std::size_t p = input.rows();
  Matrix a = input;
  // Work on the exactly symmetric average; a may be off by the input tolerance.
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      const double m = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = m;
      a(j, i) = m;
    }

  Matrix v = Matrix::identity(p);
  const double norm = frobenius_norm(a);
  const double target = 1e-12 * norm;
  constexpr int kMaxSweeps = 100;

  bool converged = offdiag_frobenius(a) <= target;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t pi = 0; pi + 1 < p; ++pi) {
      for (std::size_t qi = pi + 1; qi < p; ++qi) {
        const double apq = a(pi, qi);
        if (apq == 0.0) continue;
        const double app = a(pi, pi);
        const double aqq = a(qi, qi);
        const double theta = 0.5 * (aqq - app) / apq;
        double t;
        if (std::abs(theta) > 1e154) {
          t = 0.5 / theta;  // avoids overflow in theta^2
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(pi, pi) = app - t * apq;
        a(qi, qi) = aqq + t * apq;
        a(pi, qi) = 0.0;
        a(qi, pi) = 0.0;
        for (std::size_t r = 0; r < p; ++r) {
          if (r == pi || r == qi) continue;
          const double arp = a(r, pi);
          const double arq = a(r, qi);
          a(r, pi) = arp - s * (arq + tau * arp);
          a(pi, r) = a(r, pi);
          a(r, qi) = arq + s * (arp - tau * arq);
          a(qi, r) = a(r, qi);
        }
        for (std::size_t r = 0; r < p; ++r) {
          const double vrp = v(r, pi);
          const double vrq = v(r, qi);
          v(r, pi) = vrp - s * (vrq + tau * vrp);
          v(r, qi) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
    converged = offdiag_frobenius(a) <= target;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "sym_eig: Jacobi iteration did not converge in " << kMaxSweeps
        << " sweeps, off-diagonal residual " << offdiag_frobenius(a);
    throw NumericalError(msg.str());
  }

  SpectralDecomposition dec;
  dec.eigenvalues.resize(p);
  for (std::size_t i = 0; i < p; ++i) dec.eigenvalues[i] = a(i, i);
  dec.eigenvectors = std::move(v);
  sort_eigenpairs(dec.eigenvalues, dec.eigenvectors);
  return dec;
}

Vector weighted_mean(const Matrix& x, const Vector& w) {
  if (w.size() != x.rows()) throw InputError("weighted_mean: weight length mismatch");
  double total = 0.0;
  for (double wi : w) {
    if (wi < 0.0 || !std::isfinite(wi)) throw InputError("weighted_mean: weights must be finite and nonnegative");
    total += wi;
  }
  if (total <= 0.0) throw InputError("weighted_mean: degenerate weights (sum is zero)");

  Vector mean(x.cols(), 0.0);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const double wi = w[i];
    if (wi == 0.0) continue;
    const double* row = x.row(i);
    for (std::size_t j = 0; j < x.cols(); ++j) mean[j] += wi * row[j];
  }
  for (double& m : mean) m /= total;
  return mean;
}

Matrix weighted_scatter(const Matrix& x, const Vector& w, const Vector& mean) {
  if (w.size() != x.rows()) throw InputError("weighted_scatter: weight length mismatch");
  if (mean.size() != x.cols()) throw InputError("weighted_scatter: mean length mismatch");
  double total = 0.0;
  for (double wi : w) {
    if (wi < 0.0 || !std::isfinite(wi)) throw InputError("weighted_scatter: weights must be finite and nonnegative");
    total += wi;
  }
  if (total <= 0.0) throw InputError("weighted_scatter: degenerate weights (sum is zero)");

  const std::size_t p = x.cols();
  Matrix s(p, p, 0.0);
  Vector centered(p);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const double wi = w[i];
    if (wi == 0.0) continue;
    const double* row = x.row(i);
    for (std::size_t j = 0; j < p; ++j) centered[j] = row[j] - mean[j];
    for (std::size_t j = 0; j < p; ++j) {
      const double wj = wi * centered[j];
      double* srow = s.row(j);
      for (std::size_t k = j; k < p; ++k) srow[k] += wj * centered[k];
    }
  }
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t k = j; k < p; ++k) {
      s(j, k) /= total;
      s(k, j) = s(j, k);
    }
  return s;
}

Matrix regularize(const Matrix& s, double eps) {
  if (eps < 0.0) throw InputError("regularize: eps must be nonnegative");
  if (s.rows() != s.cols()) throw InputError("regularize: matrix is not square");
  const std::size_t p = s.rows();
  const double tr = trace(s);
  const double shift = tr > 0.0 ? eps * tr / static_cast<double>(p) : eps;
  Matrix out = s;
  for (std::size_t i = 0; i < p; ++i) out(i, i) += shift;
  return out;
}

}  // namespace mpsa
