#pragma once

#include <optional>
#include <vector>

#include "mpsa/mixture.hpp"
#include "mpsa/rng.hpp"

namespace mpsa {

// Piecewise-constant spectrum with a constant relative gap delta between
// blocks: lambda_p / lambda_1 = (1 - delta)^(d-1). Exactly one of snr
// (= lambda_p / lambda_1) and delta may be given; for a single block the
// spectrum is flat and either is accepted.
struct SpectrumSpec {
  Composition composition;
  double lambda1 = 1.0;
  std::optional<double> snr;
  std::optional<double> delta;
};

struct SyntheticSpec {
  long n = 0;
  int p = 0;
  int c_count = 0;
  Vector weights;
  // Means are either drawn uniformly from [-mean_bound, mean_bound]^p or
  // given explicitly; explicit means win when both are present.
  std::optional<double> mean_bound;
  std::vector<Vector> means;
  std::vector<SpectrumSpec> spectra;  // one per component
  // Empty for Gaussian sampling; a p-vector selects the skew-normal variant.
  Vector skew_shape;
};

struct SampleResult {
  Matrix x;                 // n x p
  std::vector<int> labels;  // 1-based ground truth
  MpsaModel truth;
};

// Haar-distributed orthogonal matrix (Gram-Schmidt on a Gaussian matrix).
Matrix haar_orthogonal(int p, Rng& rng);

// Eigenvalue vector of length p realizing the spec.
Vector build_spectrum(const SpectrumSpec& spec);

// Draw order: means (component-major, coordinate-minor, when drawn), then
// per-component Haar bases, then all labels, then samples in order.
SampleResult sample_mpsa(const SyntheticSpec& spec, Rng& rng);

// Azzalini selection-representation skew-normal with scale Q diag(lambda) Q^T
// and the given shape vector; shape zero reduces exactly to the Gaussian.
// Consumes p normals for the latent draw plus one for the selection variate.
Vector sample_skew(const Vector& mean, const Matrix& basis, const Vector& eigenvalues,
                   const Vector& shape, Rng& rng);

}  // namespace mpsa
