#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mpsa/psa.hpp"

namespace mpsa {

// One mixture component; the estimate carries the mean, composition, block
// eigenvalues and basis.
struct PsaComponent {
  double weight = 0.0;
  PsaEstimate estimate;

  const Vector& mean() const { return estimate.mean; }
  const Composition& composition() const { return estimate.composition; }
};

struct MpsaModel {
  std::vector<PsaComponent> components;
  int ambient = 0;     // p
  double alpha = 0.0;  // penalty weight used at fit time

  int size() const { return static_cast<int>(components.size()); }  // C
  std::vector<Composition> types() const;
};

// C x n column-stochastic matrix of posterior cluster probabilities;
// row c holds the responsibilities of component c.
using Responsibilities = Matrix;

enum class Strategy { Fixed, Hierarchical, Relative, BottomUp, TopDown };

enum class TypesInit { Auto, Spherical, Full };

struct FitConfig {
  static constexpr double kAlphaBic = -1.0;

  int max_iter = 200;
  double rel_tol = 1e-6;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::Hierarchical;
  // Weight of the parameter-count penalty; any negative value selects the
  // BIC-like default ln(n)/2.
  double alpha = kAlphaBic;
  double reg_eps = 1e-6;
  int kmeans_max_iter = 300;
  int kmeans_restarts = 10;
  // Initial compositions for cpem_fit; Auto picks full for the top-down
  // strategy and spherical otherwise.
  TypesInit init_types = TypesInit::Auto;
  // Effective sample size behind the relative-eigengap threshold of
  // component c: n * pi_c when true (default), plain n when false.
  bool relative_gap_uses_component_mass = true;
  // Seed responsibilities from provided labels and run a single iteration.
  bool supervised = false;
  // When set, every component's last block eigenvalue is pinned to this
  // value after each M-step (capped so block eigenvalues stay
  // non-increasing). Used by shared-noise denoising models.
  std::optional<double> fixed_noise_variance;
};

struct FitTrace {
  struct Record {
    int iteration = 0;
    double loglik = 0.0;
    double penalized = 0.0;
    long kappa = 0;
    std::vector<Composition> types;
    int reseeds = 0;  // empty-component reseeds applied this iteration
  };
  std::vector<Record> records;
};

struct FitResult {
  MpsaModel model;
  FitTrace trace;
};

// ln(n)/2 when alpha is negative, alpha itself otherwise.
double resolve_alpha(double alpha, std::size_t n);

// C - 1 + sum_c kappa(gamma_c).
long mpsa_parameter_count(const std::vector<Composition>& types);

// Cost K_c(x) = -2 ln pi_c + sum_k gamma_ck ln lambda_ck
//             + sum_k ||proj_k(x - mu_c)||^2 / lambda_ck,
// with the largest block's projection recovered by residual subtraction
// instead of explicit basis products.
double cost_K(const Vector& x, const PsaComponent& comp);

// Posterior membership probabilities, max-shift stabilized.
Responsibilities e_step(const Matrix& x, const MpsaModel& model);

double log_likelihood(const Matrix& x, const MpsaModel& model);

// log_likelihood - alpha * (C - 1 + sum_c kappa(gamma_c)).
double penalized_loglik(const Matrix& x, const MpsaModel& model, double alpha);

// Maximizer of the expected complete-data log-likelihood for fixed types.
// Components whose responsibility mass drops below 2 samples are re-seeded
// in place (see handle_empty_component), which is why t is mutable.
MpsaModel m_step(const Matrix& x, Responsibilities& t,
                 const std::vector<Composition>& types, double eps);

// Hard assignments from the best of several k-means++ / Lloyd restarts.
Responsibilities kmeans_init(const Matrix& x, int c, const FitConfig& config);

// Fixed-type EM. When config.supervised is set, labels seed the
// responsibilities and a single iteration runs.
FitResult em_fit(const Matrix& x, int c, const std::vector<Composition>& types,
                 const FitConfig& config, const std::vector<int>* labels = nullptr);

// Penalized fit score of one candidate composition against the component's
// scatter spectrum: -(n pi_c / 2) sum_k gamma_k ln lambda_k - alpha kappa.
// Only differences between candidates are meaningful.
//
// When the scatter spectrum comes from a regularized matrix S + shift * I,
// pass that shift: the expected complete-data log-likelihood of the built
// estimate then carries a composition-dependent term
// +(n pi_c / 2) shift sum_k gamma_k / lambda_k, and dropping it can rank
// near-tied candidates wrongly and break the monotonicity guarantee.
double component_score(const Vector& scatter_eigenvalues, const Composition& gamma,
                       std::size_t n, double pi_c, double alpha, double reg_shift = 0.0);

// Best candidate composition for one component under the given strategy; the
// current composition is always a candidate, so the returned score never
// decreases. Ties prefer fewer parameters, then the incumbent.
Composition select_component_type(const SpectralDecomposition& scatter,
                                  const Composition& current, Strategy strategy,
                                  std::size_t n, double pi_c, double alpha,
                                  bool relative_gap_uses_component_mass = true,
                                  double reg_shift = 0.0);

// Componentwise penalized EM: per iteration, re-select every component's
// composition from its candidate set, then M-step, then E-step. The
// penalized log-likelihood trace is non-decreasing.
FitResult cpem_fit(const Matrix& x, int c, const FitConfig& config,
                   const std::vector<int>* labels = nullptr);

// Baseline EM with types (1^q, p-q) where each component's q is re-chosen at
// every M-step by matching the tail eigenvalue mean to sigma2.
FitResult hdmi_fit(const Matrix& x, int c, double sigma2, const FitConfig& config);

// Per-sample argmin of cost_K, 1-based labels; ties take the smallest index.
std::vector<int> predict(const Matrix& x, const MpsaModel& model);

// Give component c full responsibility for the sample with the lowest
// maximum responsibility across components.
Responsibilities handle_empty_component(const Matrix& x, const Responsibilities& t, int c);

// Hard responsibilities from 1-based labels.
Responsibilities responsibilities_from_labels(const std::vector<int>& labels, int c);

}  // namespace mpsa
