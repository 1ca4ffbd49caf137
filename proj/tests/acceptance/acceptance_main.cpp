// Acceptance suite: every check prints a single [PASS]/[FAIL] line and the
// process exit code is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mpsa/datagen.hpp"
#include "mpsa/denoise.hpp"
#include "mpsa/metrics.hpp"
#include "mpsa/mixture.hpp"
#include "test_util.hpp"

using namespace mpsa;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool passed, const std::string& detail) {
  std::printf("[%s] %d. %s — %s\n", passed ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!passed) ++failures;
}

bool trace_monotone(const FitTrace& trace, double slack = 1e-8) {
  for (std::size_t s = 1; s < trace.records.size(); ++s)
    if (trace.records[s].penalized < trace.records[s - 1].penalized - slack) return false;
  return true;
}

std::vector<Composition> suite_types(int p, int c_count) {
  if (c_count == 1) {
    if (p == 2) return {Composition({1, 1})};
    if (p == 10) return {Composition({1, 2, 7})};
    return {Composition({3, 5, 12})};
  }
  if (p == 2) return {Composition({1, 1}), Composition({2}), Composition({2})};
  if (p == 10)
    return {Composition({1, 9}), Composition({1, 2, 7}), Composition({1, 2, 4, 3})};
  return {Composition({3, 5, 12}), Composition({8, 12}), Composition({20})};
}

SyntheticSpec make_spec(long n, int p, int c_count, double bound, Vector lambda1,
                        const std::vector<Composition>& types) {
  SyntheticSpec spec;
  spec.n = n;
  spec.p = p;
  spec.c_count = c_count;
  if (c_count == 1)
    spec.weights = {1.0};
  else
    spec.weights = {0.4, 0.3, 0.3};
  spec.mean_bound = bound;
  for (int c = 0; c < c_count; ++c) {
    SpectrumSpec spectrum;
    spectrum.composition = types[c];
    spectrum.lambda1 = lambda1[c];
    if (types[c].blocks() > 1) spectrum.snr = 0.01;
    spec.spectra.push_back(std::move(spectrum));
  }
  return spec;
}

// 1. CPEM monotonicity across strategies, dimensions and component counts.
void criterion_monotonicity() {
  int runs = 0;
  int violations = 0;
  for (Strategy strategy : {Strategy::Hierarchical, Strategy::Relative, Strategy::BottomUp,
                            Strategy::TopDown}) {
    for (int p : {2, 10, 20}) {
      for (int c_count : {1, 3}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          const auto types = suite_types(p, c_count);
          const Vector lambda1 = c_count == 1 ? Vector{3.0} : Vector{3.0, 2.0, 1.0};
          Rng rng(900 + seed * 131 + p * 7 + c_count);
          const auto data =
              sample_mpsa(make_spec(200, p, c_count, 4.0, lambda1, types), rng);
          FitConfig config;
          config.strategy = strategy;
          config.seed = seed;
          const FitResult fit = cpem_fit(data.x, c_count, config);
          ++runs;
          if (!trace_monotone(fit.trace)) ++violations;
        }
      }
    }
  }
  std::ostringstream detail;
  detail << runs << " runs, " << violations << " monotonicity violations (slack 1e-8)";
  report(1, "CPEM penalized log-likelihood is non-decreasing", runs >= 50 && violations == 0,
         detail.str());
}

// 2. 2D experiment: final total kappa equals 13 in at least 7 of 10 seeds.
void criterion_2d_kappa() {
  int hits = 0;
  int monotone = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SyntheticSpec spec;
    spec.n = 1000;
    spec.p = 2;
    spec.c_count = 3;
    spec.weights = {0.4, 0.3, 0.3};
    spec.mean_bound = 8.0;
    spec.spectra.push_back({Composition({1, 1}), 1.0, 0.01, {}});
    spec.spectra.push_back({Composition({2}), 0.5, {}, {}});
    spec.spectra.push_back({Composition({2}), 0.1, {}, {}});
    Rng rng(seed);
    const auto data = sample_mpsa(spec, rng);

    FitConfig config;
    config.strategy = Strategy::Hierarchical;
    config.seed = seed;
    const FitResult fit = cpem_fit(data.x, 3, config);
    if (mpsa_parameter_count(fit.model.types()) == 13) ++hits;
    if (trace_monotone(fit.trace)) ++monotone;
  }
  std::ostringstream detail;
  detail << "kappa=13 in " << hits << "/10 seeds (need >= 7), monotone traces " << monotone
         << "/10";
  report(2, "2D hierarchical fit recovers kappa = 13", hits >= 7 && monotone == 10,
         detail.str());
}

// 3. Density benchmark ordering at p = 10.
void criterion_density_ordering() {
  double mpsa_h = 0.0, gmm_f = 0.0, gmm_s = 0.0;
  const int seeds = 10;
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    const auto types = suite_types(10, 3);
    Rng rng(7000 + seed);
    const auto data = sample_mpsa(make_spec(1000, 10, 3, 5.0, {3.0, 2.0, 1.0}, types), rng);
    const double alpha = resolve_alpha(FitConfig::kAlphaBic, data.x.rows());

    FitConfig config;
    config.seed = seed;
    config.strategy = Strategy::Hierarchical;
    mpsa_h += penalized_loglik(data.x, cpem_fit(data.x, 3, config).model, alpha) / seeds;

    gmm_f += penalized_loglik(
                 data.x,
                 em_fit(data.x, 3, std::vector<Composition>(3, Composition::full(10)), config)
                     .model,
                 alpha) /
             seeds;
    gmm_s += penalized_loglik(data.x,
                              em_fit(data.x, 3,
                                     std::vector<Composition>(3, Composition::spherical(10)),
                                     config)
                                  .model,
                              alpha) /
             seeds;
  }
  std::ostringstream detail;
  detail << "mean penalized LL: MPSA-H=" << mpsa_h << " GMM-F=" << gmm_f
         << " GMM-S=" << gmm_s;
  report(3, "density fit ordering MPSA-H > GMM-F and MPSA-H > GMM-S",
         mpsa_h > gmm_f && mpsa_h > gmm_s, detail.str());
}

// 4. Clustering benchmark: mean ARI gap of at least 0.2 over GMM-S.
void criterion_clustering_gap() {
  double mpsa_h = 0.0, gmm_s = 0.0;
  const int seeds = 10;
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    const auto types = suite_types(10, 3);
    Rng rng(8000 + seed);
    const auto data = sample_mpsa(make_spec(200, 10, 3, 1.0, {10.0, 1.0, 0.1}, types), rng);

    FitConfig config;
    config.seed = seed;
    config.strategy = Strategy::Hierarchical;
    mpsa_h += ari(predict(data.x, cpem_fit(data.x, 3, config).model), data.labels) / seeds;
    gmm_s +=
        ari(predict(data.x, em_fit(data.x, 3,
                                   std::vector<Composition>(3, Composition::spherical(10)),
                                   config)
                                .model),
            data.labels) /
        seeds;
  }
  std::ostringstream detail;
  detail << "mean ARI: MPSA-H=" << mpsa_h << " GMM-S=" << gmm_s << " (need gap >= 0.2)";
  report(4, "clustering ARI gap over the spherical GMM", mpsa_h - gmm_s >= 0.2,
         detail.str());
}

// 5. Single-image denoising orderings on a 128x128 image, sigma = 30/255.
void criterion_denoising() {
  const double sigma = 30.0 / 255.0;
  const GrayImage clean = make_test_card(128, 128);
  double mpsa_u = 0.0, gmm_f = 0.0, gmm_s = 0.0;
  const int seeds = 2;
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    Rng rng(60 + seed);
    const GrayImage noisy = add_gaussian_noise(clean, sigma, rng);
    for (DenoiseModel model :
         {DenoiseModel::Mpsa, DenoiseModel::GmmFull, DenoiseModel::GmmSpherical}) {
      DenoiseConfig config;
      config.model = model;
      config.fit.strategy = Strategy::BottomUp;
      config.fit.seed = seed;
      const auto [output, rep] = denoise_image(noisy, 8, 3, config, &clean);
      const double value = *rep.psnr_denoised / seeds;
      if (model == DenoiseModel::Mpsa) mpsa_u += value;
      if (model == DenoiseModel::GmmFull) gmm_f += value;
      if (model == DenoiseModel::GmmSpherical) gmm_s += value;
    }
  }
  std::ostringstream detail;
  detail << "mean PSNR: MPSA-U=" << mpsa_u << " GMM-F=" << gmm_f << " GMM-S=" << gmm_s;
  report(5, "denoising PSNR orderings (MPSA-U >= GMM-S + 2dB, >= GMM-F)",
         mpsa_u >= gmm_s + 2.0 && mpsa_u >= gmm_f, detail.str());
}

// 6. Oracle equivalences on random instances with p <= 9.
void criterion_oracles() {
  Rng rng(4242);
  double worst_ll = 0.0, worst_estep = 0.0, worst_denoise = 0.0, worst_score = 0.0;

  for (int trial = 0; trial < 12; ++trial) {
    const int p = 3 + trial % 6;
    const MpsaModel model = test_util::random_model(p, 2, rng, 1.0);
    const Matrix x = test_util::random_data(8, p, rng);

    // (a) log-likelihood vs the direct mixture-density oracle, relative 1e-10.
    std::vector<naive::Mat> covs;
    for (const auto& comp : model.components)
      covs.push_back(test_util::component_covariance(comp.estimate));
    double oracle_ll = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      naive::Vec xi(p);
      for (int j = 0; j < p; ++j) xi[j] = x(i, j);
      double density = 0.0;
      for (int c = 0; c < model.size(); ++c)
        density += model.components[c].weight *
                   naive::gaussian_pdf(xi, model.components[c].estimate.mean, covs[c]);
      oracle_ll += std::log(density);
    }
    worst_ll = std::max(worst_ll, std::abs(log_likelihood(x, model) - oracle_ll) /
                                      std::abs(oracle_ll));

    // (b) responsibilities vs the Bayes oracle with explicit inverses, 1e-8.
    const Responsibilities t = e_step(x, model);
    for (std::size_t i = 0; i < x.rows(); ++i) {
      naive::Vec xi(p);
      for (int j = 0; j < p; ++j) xi[j] = x(i, j);
      double total = 0.0;
      naive::Vec densities(model.size());
      for (int c = 0; c < model.size(); ++c) {
        densities[c] = model.components[c].weight *
                       naive::gaussian_pdf(xi, model.components[c].estimate.mean, covs[c]);
        total += densities[c];
      }
      for (int c = 0; c < model.size(); ++c)
        worst_estep = std::max(worst_estep, std::abs(t(c, i) - densities[c] / total));
    }

    // (c) denoiser vs the explicit-inverse formula in the pinned regime, 1e-8.
    MpsaModel pinned = model;
    double sigma2 = pinned.components[0].estimate.block_eigenvalues.back();
    for (const auto& comp : pinned.components)
      sigma2 = std::min(sigma2, comp.estimate.block_eigenvalues.back());
    for (auto& comp : pinned.components) comp.estimate.block_eigenvalues.back() = sigma2;
    PatchSet patches;
    patches.patch_side = p;
    patches.data = x;
    const Matrix denoised = denoise_patches(patches, pinned, sigma2);
    const Responsibilities weights = e_step(x, pinned);
    std::vector<naive::Mat> pinned_inv;
    for (const auto& comp : pinned.components)
      pinned_inv.push_back(naive::inverse(test_util::component_covariance(comp.estimate)));
    for (std::size_t i = 0; i < x.rows(); ++i) {
      naive::Vec expected(p, 0.0);
      for (int c = 0; c < pinned.size(); ++c) {
        const auto& est = pinned.components[c].estimate;
        naive::Vec diff(p);
        for (int j = 0; j < p; ++j) diff[j] = x(i, j) - est.mean[j];
        const naive::Vec solved = naive::matvec(pinned_inv[c], diff);
        for (int j = 0; j < p; ++j)
          expected[j] += weights(c, i) * (est.mean[j] + diff[j] - sigma2 * solved[j]);
      }
      for (int j = 0; j < p; ++j)
        worst_denoise = std::max(worst_denoise, std::abs(denoised(i, j) - expected[j]));
    }

    // (d) component_score differences vs the penalized-Psi oracle, 1e-8.
    const std::size_t n = 40;
    const Matrix data = test_util::random_data(n, 4, rng);
    const MpsaModel seed_model = test_util::random_model(4, 2, rng, 1.0);
    const Responsibilities resp = e_step(data, seed_model);
    const double alpha = 1.3;
    Vector w(n);
    double mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = resp(0, i);
      mass += w[i];
    }
    const double pi_c = mass / n;
    const Vector mean = weighted_mean(data, w);
    const auto dec = sym_eig(weighted_scatter(data, w, mean));
    const Composition a({1, 3});
    const Composition b({2, 2});
    auto psi = [&](const Composition& gamma) {
      const PsaEstimate est = psa_mle(dec, mean, gamma);
      const naive::Mat cov = test_util::component_covariance(est);
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        naive::Vec xi(4);
        for (int j = 0; j < 4; ++j) xi[j] = data(i, j);
        total += w[i] * naive::gaussian_logpdf(xi, mean, cov);
      }
      return total;
    };
    const double fast_diff = component_score(dec.eigenvalues, a, n, pi_c, alpha) -
                             component_score(dec.eigenvalues, b, n, pi_c, alpha);
    const double oracle_diff =
        (psi(a) - alpha * kappa_psa(a)) - (psi(b) - alpha * kappa_psa(b));
    worst_score = std::max(worst_score, std::abs(fast_diff - oracle_diff) /
                                            std::max(1.0, std::abs(oracle_diff)));
  }

  std::ostringstream detail;
  detail << "max deviations: loglik=" << worst_ll << " (tol 1e-10), e_step=" << worst_estep
         << " (tol 1e-8), denoiser=" << worst_denoise << " (tol 1e-8), score="
         << worst_score << " (tol 1e-8)";
  report(6, "oracle equivalence suite",
         worst_ll <= 1e-10 && worst_estep <= 1e-8 && worst_denoise <= 1e-8 &&
             worst_score <= 1e-8,
         detail.str());
}

// 7. Published parameter-count fixtures, exact integers.
void criterion_kappa_fixtures() {
  auto ones_tail = [](int count, int tail) {
    std::vector<int> parts(static_cast<std::size_t>(count), 1);
    parts.push_back(tail);
    return Composition(parts);
  };
  const bool ok =
      mpsa_parameter_count({Composition({1, 1}), Composition({2}), Composition({2})}) == 13 &&
      kappa_psa(ones_tail(9, 55)) == 605 && kappa_psa(ones_tail(10, 54)) == 660 &&
      kappa_psa(ones_tail(39, 25)) == 1820 &&
      mpsa_parameter_count({ones_tail(9, 55), ones_tail(10, 54), ones_tail(39, 25)}) == 3087 &&
      kappa_psa(Composition({1, 1, 1, 1, 1, 59})) == 375 &&
      kappa_psa(Composition({1, 1, 1, 1, 1, 1, 58})) == 434 &&
      kappa_psa(Composition({1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 4, 2, 2, 44})) == 1140 &&
      mpsa_parameter_count({Composition({1, 1, 1, 1, 1, 59}),
                            Composition({1, 1, 1, 1, 1, 1, 58}),
                            Composition({1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 4, 2, 2, 44})}) ==
          1951;
  report(7, "parameter-count fixtures (13, 605/660/1820 -> 3087, 375/434/1140 -> 1951)", ok,
         ok ? "all exact" : "mismatch");
}

// 8. Structural invariants.
void criterion_structural() {
  Rng rng(31337);
  bool ok = true;
  std::ostringstream detail;

  // Trace conservation of block averaging, 1e-12 relative.
  for (int trial = 0; trial < 60 && ok; ++trial) {
    const int p = 1 + static_cast<int>(rng.uniform01() * 24);
    std::vector<int> parts;
    int run = 1;
    for (int j = 1; j < p; ++j) {
      if (rng.uniform01() < 0.4) {
        parts.push_back(run);
        run = 1;
      } else
        ++run;
    }
    parts.push_back(run);
    const Composition gamma(parts);
    Vector spectrum(p);
    double value = rng.uniform(1.0, 9.0);
    for (auto& l : spectrum) {
      l = value;
      value *= rng.uniform(0.5, 1.0);
    }
    const Vector averages = block_average(spectrum, gamma);
    double lhs = 0.0, rhs = 0.0;
    for (int k = 0; k < gamma.blocks(); ++k) lhs += gamma.parts()[k] * averages[k];
    for (double l : spectrum) rhs += l;
    if (std::abs(lhs - rhs) > 1e-12 * std::abs(rhs)) {
      ok = false;
      detail << "trace conservation violated; ";
    }
  }

  // Responsibility columns sum to one within 1e-10.
  for (int trial = 0; trial < 10 && ok; ++trial) {
    const MpsaModel model = test_util::random_model(4, 3, rng);
    const Matrix x = test_util::random_data(30, 4, rng);
    const Responsibilities t = e_step(x, model);
    for (std::size_t i = 0; i < t.cols(); ++i) {
      double sum = 0.0;
      for (std::size_t c = 0; c < t.rows(); ++c) sum += t(c, i);
      if (std::abs(sum - 1.0) > 1e-10) {
        ok = false;
        detail << "column stochasticity violated; ";
        break;
      }
    }
  }

  // Eigendecomposition reconstruction up to p = 64.
  for (int p : {8, 32, 64}) {
    const Matrix a = test_util::random_symmetric(p, rng, 2.0);
    const auto dec = sym_eig(a);
    double worst = 0.0;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        double acc = 0.0;
        for (int k = 0; k < p; ++k)
          acc += dec.eigenvectors(i, k) * dec.eigenvalues[k] * dec.eigenvectors(j, k);
        worst = std::max(worst, std::abs(acc - a(i, j)));
      }
    if (worst > 1e-8 * (1.0 + max_abs(a))) {
      ok = false;
      detail << "eig reconstruction violated at p=" << p << "; ";
    }
  }

  // Neighbor cardinalities, exact.
  for (int trial = 0; trial < 40 && ok; ++trial) {
    const int p = 1 + static_cast<int>(rng.uniform01() * 20);
    std::vector<int> parts;
    int run = 1;
    for (int j = 1; j < p; ++j) {
      if (rng.uniform01() < 0.5) {
        parts.push_back(run);
        run = 1;
      } else
        ++run;
    }
    parts.push_back(run);
    const Composition gamma(parts);
    if (upper_neighbors(gamma).size() !=
            static_cast<std::size_t>(gamma.ambient() - gamma.blocks()) ||
        lower_neighbors(gamma).size() != static_cast<std::size_t>(gamma.blocks() - 1)) {
      ok = false;
      detail << "neighbor cardinality violated; ";
    }
  }

  // ARI equals the pair-counting oracle for n <= 30.
  for (int trial = 0; trial < 40 && ok; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform01() * 28);
    std::vector<int> a(n), b(n);
    for (auto& l : a) l = 1 + static_cast<int>(rng.uniform01() * 4);
    for (auto& l : b) l = 1 + static_cast<int>(rng.uniform01() * 3);
    if (std::abs(ari(a, b) - naive::ari(a, b)) > 1e-12) {
      ok = false;
      detail << "ARI oracle mismatch; ";
    }
  }

  // The relative-eigengap composition lies inside the hierarchical chain.
  for (int trial = 0; trial < 40 && ok; ++trial) {
    const int p = 2 + static_cast<int>(rng.uniform01() * 12);
    Vector spectrum(p);
    double value = rng.uniform(1.0, 5.0);
    for (auto& l : spectrum) {
      l = value;
      value *= rng.uniform(0.5, 1.0);
    }
    const Composition relative = candidates_relative(spectrum, rng.uniform(2.0, 4000.0));
    const auto chain = candidates_hierarchical(spectrum);
    bool found = false;
    for (const auto& member : chain)
      if (member == relative) {
        found = true;
        break;
      }
    if (!found) {
      ok = false;
      detail << "relative composition not in the hierarchical chain; ";
    }
  }

  if (ok) detail << "all invariants hold";
  report(8, "structural invariant suite", ok, detail.str());
}

}  // namespace

int main() {
  std::printf("mpsa acceptance suite\n");
  criterion_monotonicity();
  criterion_2d_kappa();
  criterion_density_ordering();
  criterion_clustering_gap();
  criterion_denoising();
  criterion_oracles();
  criterion_kappa_fixtures();
  criterion_structural();
  std::printf(failures == 0 ? "all criteria passed\n" : "%d criteria FAILED\n", failures);
  return failures;
}
