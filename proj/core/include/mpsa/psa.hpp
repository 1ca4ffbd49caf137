#pragma once

#include <string>
#include <vector>

#include "mpsa/linalg.hpp"
#include "mpsa/matrix.hpp"

namespace mpsa {

// Ordered multiplicities (gamma_1, ..., gamma_d) of covariance eigenvalue
// blocks; the parts are positive and sum to the ambient dimension p.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  static Composition full(int p);       // (1, ..., 1)
  static Composition spherical(int p);  // (p)

  const std::vector<int>& parts() const { return parts_; }
  int ambient() const { return ambient_; }                       // p
  int blocks() const { return static_cast<int>(parts_.size()); }  // d

  // Half-open eigenvalue index range [begin, end) of block k.
  int block_begin(int k) const { return k == 0 ? 0 : cumulative_[k - 1]; }
  int block_end(int k) const { return cumulative_[k]; }

  std::string to_string() const;  // e.g. "(1,2,4)"

  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  std::vector<int> cumulative_;
  int ambient_ = 0;
};

// One fitted piecewise-constant-spectrum Gaussian: block eigenvalues are
// shared within each block of the composition; the basis columns are grouped
// by block in the same order.
struct PsaEstimate {
  Composition composition;
  Vector block_eigenvalues;  // length d, non-increasing
  Matrix basis;              // p x p orthonormal
  Vector mean;
};

// Number of free parameters: p + d + (p^2 - sum_k gamma_k^2) / 2.
long kappa_psa(const Composition& gamma);

// Arithmetic means of the eigenvalues within each block of gamma.
Vector block_average(const Vector& eigenvalues, const Composition& gamma);

// Closed-form maximum likelihood fit for a fixed composition: keep the
// eigenvectors, block-average the eigenvalues.
PsaEstimate psa_mle(const SpectralDecomposition& scatter, const Vector& mean,
                    const Composition& gamma);

// -(n/2) * (p ln 2pi + sum_k gamma_k ln lambda_k + p) with lambda the block
// averages of the given spectrum.
double psa_max_loglik(const Vector& eigenvalues, const Composition& gamma, long n);

// kappa(gamma) ln n - 2 max_loglik.
double bic(const Composition& gamma, double max_loglik, long n);

// Relative-eigengap threshold 2(1 - n^{2/n} + n^{1/n} sqrt(n^{2/n} - 1)).
double eigengap_threshold(double n);

// Merge every adjacent eigenvalue pair whose relative gap is below the
// threshold for n_eff samples; merging is transitive along runs.
Composition candidates_relative(const Vector& eigenvalues, double n_eff);

// Full single-linkage agglomeration chain over adjacent eigenvalue blocks,
// from (1,...,1) down to (p); dissimilarity between adjacent blocks is the
// relative gap of their boundary eigenvalues. Equal dissimilarities merge
// the lower-index pair first.
std::vector<Composition> candidates_hierarchical(const Vector& eigenvalues);

// All compositions splitting one part into an ordered pair; |result| = p - d.
std::vector<Composition> upper_neighbors(const Composition& gamma);

// All compositions merging two adjacent parts; |result| = d - 1.
std::vector<Composition> lower_neighbors(const Composition& gamma);

// Intrinsic dimension q in [0, p) whose tail eigenvalue mean is closest to
// sigma2; ties resolve to the smallest q.
int hdmi_dimension(const Vector& eigenvalues, double sigma2);

}  // namespace mpsa
