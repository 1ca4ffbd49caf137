#include "mpsa/datagen.hpp"

#include <cmath>
#include <numeric>

#include "mpsa/errors.hpp"

namespace mpsa {

namespace {

double resolve_delta(const SpectrumSpec& spec) {
  const int d = spec.composition.blocks();
  if (spec.snr && spec.delta)
    throw InputError("build_spectrum: give either snr or delta, not both");
  if (d == 1) return 0.0;  // flat spectrum; snr/delta are vacuous
  if (spec.delta) {
    if (!(*spec.delta > 0.0 && *spec.delta < 1.0))
      throw InputError("build_spectrum: delta must lie in (0, 1)");
    return *spec.delta;
  }
  if (spec.snr) {
    if (!(*spec.snr > 0.0 && *spec.snr < 1.0))
      throw InputError("build_spectrum: snr must lie in (0, 1)");
    return 1.0 - std::pow(*spec.snr, 1.0 / (d - 1));
  }
  throw InputError("build_spectrum: one of snr or delta is required");
}

int draw_label(const Vector& weights, Rng& rng) {
  const double u = rng.uniform01();
  double cum = 0.0;
  for (std::size_t c = 0; c < weights.size(); ++c) {
    cum += weights[c];
    if (u < cum) return static_cast<int>(c) + 1;
  }
  return static_cast<int>(weights.size());
}

}  // namespace

Matrix haar_orthogonal(int p, Rng& rng) {
  if (p < 1) throw InputError("haar_orthogonal: dimension must be positive");
  const std::size_t n = static_cast<std::size_t>(p);
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.normal();

  // Modified Gram-Schmidt on columns, two passes per column. The triangular
  // factor has positive diagonal, which makes Q Haar-distributed.
  Matrix q = g;
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += q(i, k) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += q(i, j) * q(i, j);
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) throw NumericalError("haar_orthogonal: degenerate Gaussian draw");
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

Vector build_spectrum(const SpectrumSpec& spec) {
  if (!(spec.lambda1 > 0.0)) throw InputError("build_spectrum: lambda1 must be positive");
  const double delta = resolve_delta(spec);
  Vector spectrum(static_cast<std::size_t>(spec.composition.ambient()));
  double value = spec.lambda1;
  for (int k = 0; k < spec.composition.blocks(); ++k) {
    for (int j = spec.composition.block_begin(k); j < spec.composition.block_end(k); ++j)
      spectrum[static_cast<std::size_t>(j)] = value;
    value *= 1.0 - delta;
  }
  return spectrum;
}

SampleResult sample_mpsa(const SyntheticSpec& spec, Rng& rng) {
  if (spec.n < 1) throw InputError("sample_mpsa: n must be positive");
  if (spec.p < 1) throw InputError("sample_mpsa: p must be positive");
  if (spec.c_count < 1) throw InputError("sample_mpsa: C must be positive");
  const std::size_t c_count = static_cast<std::size_t>(spec.c_count);
  if (spec.weights.size() != c_count)
    throw InputError("sample_mpsa: one weight per component required");
  double weight_sum = 0.0;
  for (double w : spec.weights) {
    if (!(w > 0.0)) throw InputError("sample_mpsa: weights must be positive");
    weight_sum += w;
  }
  if (std::abs(weight_sum - 1.0) > 1e-9)
    throw InputError("sample_mpsa: weights must sum to 1");
  if (spec.spectra.size() != c_count)
    throw InputError("sample_mpsa: one spectrum per component required");
  for (const auto& s : spec.spectra)
    if (s.composition.ambient() != spec.p)
      throw InputError("sample_mpsa: spectrum ambient does not match p");
  if (!spec.means.empty() && spec.means.size() != c_count)
    throw InputError("sample_mpsa: one mean per component required");
  if (spec.means.empty() && !spec.mean_bound)
    throw InputError("sample_mpsa: give means or mean_bound");
  const bool skew = !spec.skew_shape.empty();
  if (skew && spec.skew_shape.size() != static_cast<std::size_t>(spec.p))
    throw InputError("sample_mpsa: skew shape must have length p");

  const std::size_t p = static_cast<std::size_t>(spec.p);

  std::vector<Vector> means = spec.means;
  if (means.empty()) {
    const double b = *spec.mean_bound;
    means.resize(c_count, Vector(p));
    for (std::size_t c = 0; c < c_count; ++c)
      for (std::size_t j = 0; j < p; ++j) means[c][j] = rng.uniform(-b, b);
  } else {
    for (const auto& mean : means)
      if (mean.size() != p) throw InputError("sample_mpsa: mean has wrong length");
  }

  std::vector<Matrix> bases(c_count);
  std::vector<Vector> spectra(c_count);
  std::vector<Vector> block_values(c_count);
  for (std::size_t c = 0; c < c_count; ++c) {
    bases[c] = haar_orthogonal(spec.p, rng);
    spectra[c] = build_spectrum(spec.spectra[c]);
    const Composition& gamma = spec.spectra[c].composition;
    block_values[c].resize(static_cast<std::size_t>(gamma.blocks()));
    for (int k = 0; k < gamma.blocks(); ++k)
      block_values[c][static_cast<std::size_t>(k)] =
          spectra[c][static_cast<std::size_t>(gamma.block_begin(k))];
  }

  SampleResult result;
  result.labels.resize(static_cast<std::size_t>(spec.n));
  for (auto& label : result.labels) label = draw_label(spec.weights, rng);

  result.x = Matrix(static_cast<std::size_t>(spec.n), p);
  Vector z(p);
  for (std::size_t i = 0; i < static_cast<std::size_t>(spec.n); ++i) {
    const std::size_t c = static_cast<std::size_t>(result.labels[i] - 1);
    double* row = result.x.row(i);
    if (skew) {
      const Vector sample =
          sample_skew(means[c], bases[c], spectra[c], spec.skew_shape, rng);
      std::copy(sample.begin(), sample.end(), row);
    } else {
      for (std::size_t j = 0; j < p; ++j) z[j] = std::sqrt(spectra[c][j]) * rng.normal();
      for (std::size_t r = 0; r < p; ++r) {
        double acc = means[c][r];
        for (std::size_t j = 0; j < p; ++j) acc += bases[c](r, j) * z[j];
        row[r] = acc;
      }
    }
  }

  result.truth.ambient = spec.p;
  result.truth.alpha = 0.0;
  for (std::size_t c = 0; c < c_count; ++c) {
    PsaComponent comp;
    comp.weight = spec.weights[c];
    comp.estimate.composition = spec.spectra[c].composition;
    comp.estimate.block_eigenvalues = block_values[c];
    comp.estimate.basis = bases[c];
    comp.estimate.mean = means[c];
    result.truth.components.push_back(std::move(comp));
  }
  return result;
}

Vector sample_skew(const Vector& mean, const Matrix& basis, const Vector& eigenvalues,
                   const Vector& shape, Rng& rng) {
  const std::size_t p = mean.size();
  if (basis.rows() != p || basis.cols() != p)
    throw InputError("sample_skew: basis dimension mismatch");
  if (eigenvalues.size() != p) throw InputError("sample_skew: eigenvalue count mismatch");
  if (shape.size() != p) throw InputError("sample_skew: shape length mismatch");

  // y ~ N(0, Sigma) with Sigma = Q diag(lambda) Q^T.
  Vector z(p);
  for (std::size_t j = 0; j < p; ++j) z[j] = std::sqrt(eigenvalues[j]) * rng.normal();
  Vector y(p, 0.0);
  for (std::size_t r = 0; r < p; ++r) {
    double acc = 0.0;
    for (std::size_t j = 0; j < p; ++j) acc += basis(r, j) * z[j];
    y[r] = acc;
  }

  // Selection variate x0 with Corr(x0, standardized y) = Omega_bar alpha / s:
  // x0 = (alpha^T y_standardized + w) / s, s = sqrt(1 + alpha^T Omega_bar alpha).
  Vector scaled_shape(p);  // alpha_i / omega_i
  for (std::size_t i = 0; i < p; ++i) {
    double var = 0.0;
    for (std::size_t j = 0; j < p; ++j) var += basis(i, j) * basis(i, j) * eigenvalues[j];
    scaled_shape[i] = shape[i] / std::sqrt(var);
  }
  double quad = 0.0;  // alpha^T Omega_bar alpha = u^T Sigma u
  for (std::size_t j = 0; j < p; ++j) {
    double dot = 0.0;
    for (std::size_t i = 0; i < p; ++i) dot += basis(i, j) * scaled_shape[i];
    quad += eigenvalues[j] * dot * dot;
  }
  double dot_shape = 0.0;
  for (std::size_t i = 0; i < p; ++i) dot_shape += scaled_shape[i] * y[i];
  const double w = rng.normal();
  const double x0 = (dot_shape + w) / std::sqrt(1.0 + quad);

  Vector out(p);
  const double sign = x0 > 0.0 ? 1.0 : -1.0;
  for (std::size_t i = 0; i < p; ++i) out[i] = mean[i] + sign * y[i];
  return out;
}

}  // namespace mpsa
