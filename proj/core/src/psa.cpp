#include "mpsa/psa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "mpsa/errors.hpp"

namespace mpsa {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InputError("Composition: no parts");
  cumulative_.reserve(parts_.size());
  int sum = 0;
  for (int part : parts_) {
    if (part < 1) throw InputError("Composition: parts must be positive");
    sum += part;
    cumulative_.push_back(sum);
  }
  ambient_ = sum;
}

Composition Composition::full(int p) {
  return Composition(std::vector<int>(static_cast<std::size_t>(p), 1));
}

Composition Composition::spherical(int p) { return Composition({p}); }

std::string Composition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out << ',';
    out << parts_[k];
  }
  out << ')';
  return out.str();
}

long kappa_psa(const Composition& gamma) {
  const long p = gamma.ambient();
  const long d = gamma.blocks();
  long sum_sq = 0;
  for (int part : gamma.parts()) sum_sq += static_cast<long>(part) * part;
  return p + d + (p * p - sum_sq) / 2;
}

Vector block_average(const Vector& eigenvalues, const Composition& gamma) {
  if (static_cast<int>(eigenvalues.size()) != gamma.ambient())
    throw InputError("block_average: spectrum length does not match the composition ambient");
  Vector averages(gamma.parts().size());
  for (int k = 0; k < gamma.blocks(); ++k) {
    double sum = 0.0;
    for (int j = gamma.block_begin(k); j < gamma.block_end(k); ++j) sum += eigenvalues[j];
    averages[k] = sum / gamma.parts()[k];
  }
  return averages;
}

PsaEstimate psa_mle(const SpectralDecomposition& scatter, const Vector& mean,
                    const Composition& gamma) {
  PsaEstimate est;
  est.composition = gamma;
  est.block_eigenvalues = block_average(scatter.eigenvalues, gamma);
  est.basis = scatter.eigenvectors;
  est.mean = mean;
  return est;
}

double psa_max_loglik(const Vector& eigenvalues, const Composition& gamma, long n) {
  const Vector averages = block_average(eigenvalues, gamma);
  const double p = gamma.ambient();
  double log_det = 0.0;
  for (int k = 0; k < gamma.blocks(); ++k) {
    if (averages[k] <= 0.0)
      throw NumericalError("psa_max_loglik: block eigenvalue is not positive");
    log_det += gamma.parts()[k] * std::log(averages[k]);
  }
  return -0.5 * n * (p * std::log(2.0 * std::numbers::pi) + log_det + p);
}

double bic(const Composition& gamma, double max_loglik, long n) {
  if (n < 2) throw InputError("bic: needs n >= 2");
  return kappa_psa(gamma) * std::log(static_cast<double>(n)) - 2.0 * max_loglik;
}

double eigengap_threshold(double n) {
  if (!(n >= 2.0)) throw InputError("eigengap_threshold: needs n >= 2");
  const double a = std::pow(n, 2.0 / n);
  const double b = std::pow(n, 1.0 / n);
  return 2.0 * (1.0 - a + b * std::sqrt(a - 1.0));
}

Composition candidates_relative(const Vector& eigenvalues, double n_eff) {
  const double threshold = eigengap_threshold(n_eff);
  std::vector<int> parts;
  int run = 1;
  for (std::size_t j = 0; j + 1 < eigenvalues.size(); ++j) {
    const double gap = (eigenvalues[j] - eigenvalues[j + 1]) / eigenvalues[j];
    if (gap < threshold) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

std::vector<Composition> candidates_hierarchical(const Vector& eigenvalues) {
  const int p = static_cast<int>(eigenvalues.size());
  // Boundary b sits between eigenvalues b and b+1; its dissimilarity never
  // changes as blocks merge, so the merge order is just the sorted gaps.
  std::vector<int> merge_order(static_cast<std::size_t>(p > 0 ? p - 1 : 0));
  std::iota(merge_order.begin(), merge_order.end(), 0);
  Vector gaps(merge_order.size());
  for (std::size_t b = 0; b < gaps.size(); ++b)
    gaps[b] = (eigenvalues[b] - eigenvalues[b + 1]) / eigenvalues[b];
  std::stable_sort(merge_order.begin(), merge_order.end(),
                   [&](int a, int b) { return gaps[a] < gaps[b]; });

  std::vector<bool> boundary(static_cast<std::size_t>(p > 0 ? p - 1 : 0), true);
  auto current = [&]() {
    std::vector<int> parts;
    int run = 1;
    for (int j = 0; j + 1 < p; ++j) {
      if (boundary[j]) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
  };

  std::vector<Composition> chain;
  chain.reserve(p);
  chain.push_back(current());
  for (int b : merge_order) {
    boundary[b] = false;
    chain.push_back(current());
  }
  return chain;
}

std::vector<Composition> upper_neighbors(const Composition& gamma) {
  std::vector<Composition> result;
  result.reserve(gamma.ambient() - gamma.blocks());
  const auto& parts = gamma.parts();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (int left = 1; left < parts[k]; ++left) {
      std::vector<int> split;
      split.reserve(parts.size() + 1);
      split.insert(split.end(), parts.begin(), parts.begin() + k);
      split.push_back(left);
      split.push_back(parts[k] - left);
      split.insert(split.end(), parts.begin() + k + 1, parts.end());
      result.emplace_back(std::move(split));
    }
  }
  return result;
}

std::vector<Composition> lower_neighbors(const Composition& gamma) {
  std::vector<Composition> result;
  const auto& parts = gamma.parts();
  if (parts.size() < 2) return result;
  result.reserve(parts.size() - 1);
  for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
    std::vector<int> merged;
    merged.reserve(parts.size() - 1);
    merged.insert(merged.end(), parts.begin(), parts.begin() + k);
    merged.push_back(parts[k] + parts[k + 1]);
    merged.insert(merged.end(), parts.begin() + k + 2, parts.end());
    result.emplace_back(std::move(merged));
  }
  return result;
}

int hdmi_dimension(const Vector& eigenvalues, double sigma2) {
  const int p = static_cast<int>(eigenvalues.size());
  double tail = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
  int best_q = 0;
  double best = std::abs(sigma2 - tail / p);
  for (int q = 1; q < p; ++q) {
    tail -= eigenvalues[q - 1];
    const double deviation = std::abs(sigma2 - tail / (p - q));
    if (deviation < best) {
      best = deviation;
      best_q = q;
    }
  }
  return best_q;
}

}  // namespace mpsa
