#pragma once

#include "mpsa/matrix.hpp"

namespace mpsa {

// Eigendecomposition of a symmetric matrix: A = V diag(l) V^T with
// eigenvalues sorted descending and orthonormal eigenvector columns.
struct SpectralDecomposition {
  Vector eigenvalues;
  Matrix eigenvectors;  // column j pairs with eigenvalues[j]
};

// Cyclic Jacobi eigensolver for dense symmetric matrices.
//
// Deterministic for a fixed input: rotations are applied in a fixed cyclic
// order and equal eigenvalues are ordered by the index of the
// largest-magnitude entry of their eigenvector. Converges when the
// off-diagonal Frobenius norm drops below 1e-12 * ||A||_F, within a budget
// of 100 sweeps.
SpectralDecomposition sym_eig(const Matrix& a);

// sum_i w_i x_i / sum_i w_i over the rows of x.
Vector weighted_mean(const Matrix& x, const Vector& w);

// sum_i w_i (x_i - mean)(x_i - mean)^T / sum_i w_i.
Matrix weighted_scatter(const Matrix& x, const Vector& w, const Vector& mean);

// S + eps * (trace(S)/p) * I, falling back to S + eps * I when the trace
// vanishes, so that sample covariances stay invertible.
Matrix regularize(const Matrix& s, double eps);

}  // namespace mpsa
