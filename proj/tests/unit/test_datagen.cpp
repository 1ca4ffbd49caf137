#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mpsa/datagen.hpp"
#include "mpsa/errors.hpp"
#include "mpsa/linalg.hpp"
#include "test_util.hpp"

using namespace mpsa;

TEST_CASE("haar_orthogonal is orthonormal") {
  Rng rng(11);
  SUBCASE("p = 1 is a sign") {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix q = haar_orthogonal(1, rng);
      CHECK(std::abs(std::abs(q(0, 0)) - 1.0) <= 1e-14);
    }
  }
  SUBCASE("p = 50 columns are orthonormal to 1e-10") {
    const Matrix q = haar_orthogonal(50, rng);
    double worst = 0.0;
    for (int a = 0; a < 50; ++a)
      for (int b = 0; b < 50; ++b) {
        double dot = 0.0;
        for (int i = 0; i < 50; ++i) dot += q(i, a) * q(i, b);
        worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
      }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("haar_orthogonal entries are centered") {
  // Monte-Carlo symmetry check: the (0,0) entry averages to zero, with
  // standard error sqrt(1/(p N)).
  Rng rng(12);
  const int draws = 10000;
  const int p = 3;
  double sum = 0.0;
  for (int trial = 0; trial < draws; ++trial) sum += haar_orthogonal(p, rng)(0, 0);
  const double mean = sum / draws;
  CHECK(std::abs(mean) <= 4.0 * std::sqrt(1.0 / (p * static_cast<double>(draws))));
}

TEST_CASE("build_spectrum") {
  SUBCASE("single block is flat") {
    SpectrumSpec spec{Composition::spherical(4), 2.5, {}, {}};
    const Vector spectrum = build_spectrum(spec);
    for (double value : spectrum) CHECK(value == 2.5);
  }
  SUBCASE("one boundary with delta") {
    SpectrumSpec spec{Composition({1, 1}), 1.0, {}, 0.5};
    const Vector spectrum = build_spectrum(spec);
    CHECK(spectrum[0] == doctest::Approx(1.0));
    CHECK(spectrum[1] == doctest::Approx(0.5));
  }
  SUBCASE("snr parameterization inverts to delta") {
    SpectrumSpec spec{Composition::full(3), 1.0, 0.01, {}};
    const Vector spectrum = build_spectrum(spec);
    CHECK(spectrum[0] == doctest::Approx(1.0));
    CHECK(spectrum[1] == doctest::Approx(0.1));
    CHECK(spectrum[2] == doctest::Approx(0.01));
  }
  SUBCASE("exactly one of snr and delta") {
    CHECK_THROWS_AS(build_spectrum({Composition::full(3), 1.0, 0.1, 0.1}), InputError);
    CHECK_THROWS_AS(build_spectrum({Composition::full(3), 1.0, {}, {}}), InputError);
  }
  SUBCASE("boundary gaps are exact, inner gaps are zero") {
    SpectrumSpec spec{Composition({2, 3, 1}), 4.0, {}, 0.35};
    const Vector spectrum = build_spectrum(spec);
    const Composition& gamma = spec.composition;
    for (int k = 0; k + 1 < gamma.blocks(); ++k) {
      const int boundary = gamma.block_end(k) - 1;
      const double gap = (spectrum[boundary] - spectrum[boundary + 1]) / spectrum[boundary];
      CHECK(gap == doctest::Approx(0.35).epsilon(1e-14));
    }
    for (int k = 0; k < gamma.blocks(); ++k)
      for (int j = gamma.block_begin(k); j + 1 < gamma.block_end(k); ++j)
        CHECK(spectrum[j] == spectrum[j + 1]);
  }
}

namespace {

SyntheticSpec simple_spec(long n, int p) {
  SyntheticSpec spec;
  spec.n = n;
  spec.p = p;
  spec.c_count = 1;
  spec.weights = {1.0};
  spec.means = {Vector(p, 0.0)};
  spec.spectra = {{Composition::spherical(p), 1.0, {}, {}}};
  return spec;
}

}  // namespace

TEST_CASE("sample_mpsa standard normal covariance converges") {
  Rng rng(21);
  const auto result = sample_mpsa(simple_spec(100000, 3), rng);
  Vector w(result.x.rows(), 1.0);
  const Vector mean = weighted_mean(result.x, w);
  const Matrix s = weighted_scatter(result.x, w, mean);
  double frob = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double d = s(i, j) - (i == j ? 1.0 : 0.0);
      frob += d * d;
    }
  // E ||S - I||_F^2 ~ (p^2 + p) / n; allow a factor-of-4 cushion.
  CHECK(std::sqrt(frob) <= 4.0 * std::sqrt(12.0 / 100000.0));
}

TEST_CASE("sample_mpsa label frequencies match the weights") {
  Rng rng(22);
  SyntheticSpec spec;
  spec.n = 100000;
  spec.p = 2;
  spec.c_count = 3;
  spec.weights = {0.4, 0.3, 0.3};
  spec.mean_bound = 5.0;
  spec.spectra.assign(3, {Composition::spherical(2), 1.0, {}, {}});
  const auto result = sample_mpsa(spec, rng);
  std::vector<double> freq(3, 0.0);
  for (int label : result.labels) freq[label - 1] += 1.0;
  for (auto& f : freq) f /= spec.n;
  for (int c = 0; c < 3; ++c) {
    const double se = std::sqrt(spec.weights[c] * (1 - spec.weights[c]) / spec.n);
    CHECK(std::abs(freq[c] - spec.weights[c]) <= 4.0 * se);
  }
}

TEST_CASE("sample_mpsa recovers the block spectrum per cluster") {
  Rng rng(23);
  SyntheticSpec spec;
  spec.n = 100000;
  spec.p = 3;
  spec.c_count = 1;
  spec.weights = {1.0};
  spec.means = {Vector(3, 0.0)};
  spec.spectra = {{Composition::full(3), 1.0, 0.01, {}}};
  const auto result = sample_mpsa(spec, rng);

  Vector w(result.x.rows(), 1.0);
  const Vector mean = weighted_mean(result.x, w);
  const auto dec = sym_eig(weighted_scatter(result.x, w, mean));
  const Vector expected = {1.0, 0.1, 0.01};
  for (int j = 0; j < 3; ++j)
    CHECK(dec.eigenvalues[j] == doctest::Approx(expected[j]).epsilon(0.05));
}

TEST_CASE("sample_mpsa is reproducible from the seed") {
  SyntheticSpec spec;
  spec.n = 50;
  spec.p = 4;
  spec.c_count = 2;
  spec.weights = {0.5, 0.5};
  spec.mean_bound = 3.0;
  spec.spectra.assign(2, {Composition({1, 3}), 2.0, {}, 0.5});

  Rng rng_a(99, 1);
  Rng rng_b(99, 1);
  const auto a = sample_mpsa(spec, rng_a);
  const auto b = sample_mpsa(spec, rng_b);
  CHECK(a.x == b.x);
  CHECK(a.labels == b.labels);

  Rng rng_c(100, 1);
  const auto c = sample_mpsa(spec, rng_c);
  CHECK(a.x.entries() != c.x.entries());
}

TEST_CASE("ground truth model mirrors the spec") {
  Rng rng(31);
  SyntheticSpec spec;
  spec.n = 10;
  spec.p = 5;
  spec.c_count = 2;
  spec.weights = {0.6, 0.4};
  spec.mean_bound = 1.0;
  spec.spectra = {{Composition({2, 3}), 1.0, {}, 0.5}, {Composition::spherical(5), 0.7, {}, {}}};
  const auto result = sample_mpsa(spec, rng);
  CHECK(result.truth.ambient == 5);
  CHECK(result.truth.components[0].estimate.composition == Composition({2, 3}));
  CHECK(result.truth.components[0].estimate.block_eigenvalues[0] == doctest::Approx(1.0));
  CHECK(result.truth.components[0].estimate.block_eigenvalues[1] == doctest::Approx(0.5));
  CHECK(kappa_psa(result.truth.components[0].estimate.composition) == 5 + 2 + (25 - 13) / 2);
}

TEST_CASE("sample_skew with zero shape reduces to the Gaussian") {
  Rng rng(41);
  const int p = 2;
  const Matrix basis = haar_orthogonal(p, rng);
  const Vector lambda = {2.0, 0.5};
  const Vector mean = {1.0, -1.0};
  const Vector shape(p, 0.0);

  // Sigma = Q diag(lambda) Q^T, materialized for the moment targets.
  naive::Mat sigma(p, naive::Vec(p, 0.0));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k) sigma[i][j] += basis(i, k) * lambda[k] * basis(j, k);

  const int n = 10000;
  Vector sample_mean(p, 0.0);
  naive::Mat sample_cov(p, naive::Vec(p, 0.0));
  std::vector<Vector> draws;
  draws.reserve(n);
  for (int i = 0; i < n; ++i) {
    draws.push_back(sample_skew(mean, basis, lambda, shape, rng));
    for (int j = 0; j < p; ++j) sample_mean[j] += draws.back()[j];
  }
  for (auto& m : sample_mean) m /= n;
  for (const auto& draw : draws)
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        sample_cov[i][j] += (draw[i] - sample_mean[i]) * (draw[j] - sample_mean[j]) / n;

  for (int j = 0; j < p; ++j) {
    const double se = std::sqrt(sigma[j][j] / n);
    CHECK(std::abs(sample_mean[j] - mean[j]) <= 5.0 * se);
  }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const double se = std::sqrt((sigma[i][i] * sigma[j][j] + sigma[i][j] * sigma[i][j]) / n);
      CHECK(std::abs(sample_cov[i][j] - sigma[i][j]) <= 5.0 * se);
    }
}

TEST_CASE("sample_skew approaches the half-normal for huge shape") {
  Rng rng(42);
  const Matrix basis = Matrix::identity(1);
  const Vector lambda = {1.0};
  const Vector mean = {0.0};
  const Vector shape = {1000.0};
  int positive = 0;
  const int n = 5000;
  for (int i = 0; i < n; ++i)
    if (sample_skew(mean, basis, lambda, shape, rng)[0] > 0.0) ++positive;
  CHECK(static_cast<double>(positive) / n >= 0.99);
}

TEST_CASE("sample_skew mean shifts along the shape direction") {
  Rng rng(43);
  const int p = 2;
  const Matrix basis = Matrix::identity(p);
  const Vector lambda = {1.0, 4.0};
  const Vector mean = {0.0, 0.0};
  const Vector shape = {3.0, 3.0};
  Vector avg(p, 0.0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const Vector draw = sample_skew(mean, basis, lambda, shape, rng);
    for (int j = 0; j < p; ++j) avg[j] += draw[j] / n;
  }
  for (int j = 0; j < p; ++j) CHECK(avg[j] > 0.1);
}
