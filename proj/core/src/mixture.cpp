#include "mpsa/mixture.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "mpsa/errors.hpp"
#include "mpsa/rng.hpp"

namespace mpsa {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;  // ln(2 pi)

// Index of the block whose projection is recovered by residual subtraction:
// the largest block, the last one on a size tie. Substituting the largest
// block removes the most basis products from the cost evaluation.
int residual_block(const Composition& gamma) {
  int best = 0;
  for (int k = 1; k < gamma.blocks(); ++k)
    if (gamma.parts()[k] >= gamma.parts()[best]) best = k;
  return best;
}

// Precomputed state for evaluating K_c over many samples.
class CostEvaluator {
 public:
  CostEvaluator(const PsaComponent& comp, int index) : comp_index_(index) {
    const PsaEstimate& est = comp.estimate;
    const Composition& gamma = est.composition;
    p_ = gamma.ambient();
    mean_ = est.mean;
    residual_ = residual_block(gamma);
    if (comp.weight <= 0.0)
      throw NumericalError(cost_error("component weight is not positive"));

    constant_ = -2.0 * std::log(comp.weight);
    for (int k = 0; k < gamma.blocks(); ++k) {
      const double lambda = est.block_eigenvalues[k];
      if (!(lambda > 0.0))
        throw NumericalError(cost_error("block eigenvalue is not positive"));
      constant_ += gamma.parts()[k] * std::log(lambda);
      if (k != residual_) {
        for (int j = gamma.block_begin(k); j < gamma.block_end(k); ++j)
          rows_.push_back(j);
        row_inv_lambda_.resize(rows_.size(), 1.0 / lambda);
      }
    }
    inv_lambda_residual_ = 1.0 / est.block_eigenvalues[residual_];
    basis_t_ = transpose(est.basis);
  }

  double operator()(const double* x, Vector& diff) const {
    double sq_norm = 0.0;
    for (int j = 0; j < p_; ++j) {
      diff[j] = x[j] - mean_[j];
      sq_norm += diff[j] * diff[j];
    }
    double cost = constant_;
    double projected = 0.0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const double* row = basis_t_.row(rows_[r]);
      double dot = 0.0;
      for (int j = 0; j < p_; ++j) dot += row[j] * diff[j];
      const double sq = dot * dot;
      projected += sq;
      cost += sq * row_inv_lambda_[r];
    }
    cost += std::max(sq_norm - projected, 0.0) * inv_lambda_residual_;
    return cost;
  }

  int component_index() const { return comp_index_; }

 private:
  std::string cost_error(const char* what) const {
    std::ostringstream msg;
    msg << "cost_K: " << what << " (component " << comp_index_ + 1 << ")";
    return msg.str();
  }

  int p_ = 0;
  int comp_index_ = 0;
  int residual_ = 0;
  double constant_ = 0.0;
  double inv_lambda_residual_ = 0.0;
  Vector mean_;
  Matrix basis_t_;                 // rows are eigenvectors
  std::vector<int> rows_;          // basis rows outside the residual block
  Vector row_inv_lambda_;          // 1/lambda for each such row
};

std::vector<CostEvaluator> make_evaluators(const MpsaModel& model) {
  if (model.components.empty()) throw InputError("mixture: model has no components");
  std::vector<CostEvaluator> evals;
  evals.reserve(model.components.size());
  for (int c = 0; c < model.size(); ++c) {
    if (model.components[c].estimate.composition.ambient() != model.ambient)
      throw InputError("mixture: component ambient dimension mismatch");
    evals.emplace_back(model.components[c], c);
  }
  return evals;
}

// C x n matrix of costs K_c(x_i).
Matrix cost_matrix(const Matrix& x, const MpsaModel& model) {
  const auto evals = make_evaluators(model);
  const std::size_t n = x.rows();
  Matrix costs(model.size(), n);
  Vector diff(model.ambient);
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = x.row(i);
    for (int c = 0; c < model.size(); ++c) {
      const double k = evals[c](xi, diff);
      if (!std::isfinite(k)) {
        std::ostringstream msg;
        msg << "e_step: non-finite cost for sample " << i + 1 << ", component " << c + 1;
        throw NumericalError(msg.str());
      }
      costs(c, i) = k;
    }
  }
  return costs;
}

void check_column_stochastic(const Responsibilities& t) {
  for (std::size_t i = 0; i < t.cols(); ++i) {
    double sum = 0.0;
    for (std::size_t c = 0; c < t.rows(); ++c) {
      const double v = t(c, i);
      if (v < 0.0 || !std::isfinite(v))
        throw InputError("responsibilities: entries must be finite and nonnegative");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-10)
      throw InputError("responsibilities: columns must sum to 1");
  }
}

struct ComponentStats {
  double weight = 0.0;
  Vector mean;
  SpectralDecomposition scatter;  // of the regularized matrix
  double reg_shift = 0.0;         // diagonal shift the regularization added
};

// Reseeds starved components, then reduces each row of t to the component's
// weighted first and second moments (scatter regularized and decomposed).
std::vector<ComponentStats> component_stats(const Matrix& x, Responsibilities& t,
                                            double eps, int& reseeds) {
  const std::size_t c_count = t.rows();
  const std::size_t n = t.cols();
  reseeds = 0;

  Vector mass(c_count);
  auto recompute_mass = [&]() {
    for (std::size_t c = 0; c < c_count; ++c)
      mass[c] = std::accumulate(t.row(c), t.row(c) + n, 0.0);
  };
  recompute_mass();
  const double floor = std::min(2.0, static_cast<double>(n));
  for (std::size_t attempt = 0; attempt < 2 * c_count; ++attempt) {
    std::size_t starved = c_count;
    for (std::size_t c = 0; c < c_count; ++c)
      if (mass[c] < floor) {
        starved = c;
        break;
      }
    if (starved == c_count) break;
    const double before = mass[starved];
    t = handle_empty_component(x, t, static_cast<int>(starved));
    ++reseeds;
    recompute_mass();
    if (mass[starved] <= before) break;  // no progress possible
  }

  std::vector<ComponentStats> stats(c_count);
  Vector weights(n);
  for (std::size_t c = 0; c < c_count; ++c) {
    std::copy(t.row(c), t.row(c) + n, weights.begin());
    stats[c].weight = mass[c] / static_cast<double>(n);
    stats[c].mean = weighted_mean(x, weights);
    Matrix scatter = weighted_scatter(x, weights, stats[c].mean);
    const double tr = trace(scatter);
    stats[c].reg_shift = tr > 0.0 ? eps * tr / static_cast<double>(x.cols()) : eps;
    stats[c].scatter = sym_eig(regularize(scatter, eps));
    for (double& l : stats[c].scatter.eigenvalues) l = std::max(l, 0.0);
  }
  return stats;
}

MpsaModel assemble_model(const std::vector<ComponentStats>& stats,
                         const std::vector<Composition>& types, int p, double alpha,
                         const std::optional<double>& noise_pin = std::nullopt) {
  MpsaModel model;
  model.ambient = p;
  model.alpha = alpha;
  model.components.reserve(stats.size());
  for (std::size_t c = 0; c < stats.size(); ++c) {
    PsaComponent comp;
    comp.weight = stats[c].weight;
    comp.estimate = psa_mle(stats[c].scatter, stats[c].mean, types[c]);
    if (noise_pin) {
      auto& lambdas = comp.estimate.block_eigenvalues;
      const std::size_t last = lambdas.size() - 1;
      lambdas[last] = last == 0 ? *noise_pin : std::min(*noise_pin, lambdas[last - 1]);
    }
    model.components.push_back(std::move(comp));
  }
  return model;
}

double squared_distance(const double* a, const double* b, std::size_t p) {
  double s = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    const double d = a[j] - b[j];
    s += d * d;
  }
  return s;
}

std::size_t count_distinct_rows(const Matrix& x) {
  const std::size_t n = x.rows();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(x.row(a), x.row(a) + x.cols(), x.row(b),
                                        x.row(b) + x.cols());
  };
  std::sort(order.begin(), order.end(), less);
  std::size_t distinct = n == 0 ? 0 : 1;
  for (std::size_t i = 1; i < n; ++i)
    if (less(order[i - 1], order[i])) ++distinct;
  return distinct;
}

// Relative improvement against the previous objective value; the unit floor
// keeps the test meaningful when the objective sits near zero.
bool small_improvement(double current, double previous, double rel_tol) {
  return current - previous <= rel_tol * std::max(1.0, std::abs(previous));
}

std::vector<Composition> initial_types(const FitConfig& config, int c_count, int p) {
  TypesInit init = config.init_types;
  if (init == TypesInit::Auto)
    init = config.strategy == Strategy::TopDown ? TypesInit::Full : TypesInit::Spherical;
  const Composition gamma0 =
      init == TypesInit::Full ? Composition::full(p) : Composition::spherical(p);
  return std::vector<Composition>(static_cast<std::size_t>(c_count), gamma0);
}

Responsibilities initial_responsibilities(const Matrix& x, int c_count,
                                          const FitConfig& config,
                                          const std::vector<int>* labels) {
  if (config.supervised) {
    if (labels == nullptr)
      throw InputError("fit: supervised mode needs labels");
    if (labels->size() != x.rows())
      throw InputError("fit: label count does not match the sample count");
    return responsibilities_from_labels(*labels, c_count);
  }
  return kmeans_init(x, c_count, config);
}

}  // namespace

std::vector<Composition> MpsaModel::types() const {
  std::vector<Composition> result;
  result.reserve(components.size());
  for (const auto& comp : components) result.push_back(comp.estimate.composition);
  return result;
}

double resolve_alpha(double alpha, std::size_t n) {
  if (alpha >= 0.0) return alpha;
  return 0.5 * std::log(static_cast<double>(n));
}

long mpsa_parameter_count(const std::vector<Composition>& types) {
  if (types.empty()) throw InputError("mpsa_parameter_count: no components");
  long total = static_cast<long>(types.size()) - 1;
  for (const auto& gamma : types) total += kappa_psa(gamma);
  return total;
}

double cost_K(const Vector& x, const PsaComponent& comp) {
  if (static_cast<int>(x.size()) != comp.estimate.composition.ambient())
    throw InputError("cost_K: sample dimension mismatch");
  CostEvaluator eval(comp, 0);
  Vector diff(x.size());
  return eval(x.data(), diff);
}

Responsibilities e_step(const Matrix& x, const MpsaModel& model) {
  const Matrix costs = cost_matrix(x, model);
  Responsibilities t(costs.rows(), costs.cols());
  for (std::size_t i = 0; i < costs.cols(); ++i) {
    double min_cost = costs(0, i);
    for (std::size_t c = 1; c < costs.rows(); ++c) min_cost = std::min(min_cost, costs(c, i));
    double total = 0.0;
    for (std::size_t c = 0; c < costs.rows(); ++c) {
      const double e = std::exp(-0.5 * (costs(c, i) - min_cost));
      t(c, i) = e;
      total += e;
    }
    for (std::size_t c = 0; c < costs.rows(); ++c) t(c, i) /= total;
  }
  return t;
}

double log_likelihood(const Matrix& x, const MpsaModel& model) {
  const Matrix costs = cost_matrix(x, model);
  const double p = model.ambient;
  double loglik = 0.0;
  for (std::size_t i = 0; i < costs.cols(); ++i) {
    double min_cost = costs(0, i);
    for (std::size_t c = 1; c < costs.rows(); ++c) min_cost = std::min(min_cost, costs(c, i));
    double total = 0.0;
    for (std::size_t c = 0; c < costs.rows(); ++c)
      total += std::exp(-0.5 * (costs(c, i) - min_cost));
    loglik += -0.5 * (min_cost + p * kLog2Pi) + std::log(total);
  }
  return loglik;
}

double penalized_loglik(const Matrix& x, const MpsaModel& model, double alpha) {
  return log_likelihood(x, model) - alpha * mpsa_parameter_count(model.types());
}

MpsaModel m_step(const Matrix& x, Responsibilities& t,
                 const std::vector<Composition>& types, double eps) {
  if (t.cols() != x.rows()) throw InputError("m_step: responsibilities sample count mismatch");
  if (types.size() != t.rows()) throw InputError("m_step: one composition per component required");
  for (const auto& gamma : types)
    if (gamma.ambient() != static_cast<int>(x.cols()))
      throw InputError("m_step: composition ambient does not match the data dimension");
  check_column_stochastic(t);
  int reseeds = 0;
  const auto stats = component_stats(x, t, eps, reseeds);
  return assemble_model(stats, types, static_cast<int>(x.cols()), 0.0);
}

Responsibilities kmeans_init(const Matrix& x, int c_count, const FitConfig& config) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (c_count < 1) throw InputError("kmeans_init: needs at least one cluster");
  const std::size_t c = static_cast<std::size_t>(c_count);
  if (n < c) throw InputError("kmeans_init: more clusters than samples");
  if (count_distinct_rows(x) < c)
    throw InputError("kmeans_init: fewer distinct points than clusters");

  std::vector<int> best_assign(n, 0);
  double best_wcss = std::numeric_limits<double>::infinity();

  Matrix centers(c, p);
  std::vector<int> assign(n);
  Vector d2(n);

  for (int restart = 0; restart < std::max(1, config.kmeans_restarts); ++restart) {
    Rng rng(config.seed, static_cast<std::uint64_t>(restart));

    // k-means++ seeding
    const std::size_t first = std::min(n - 1, static_cast<std::size_t>(rng.uniform01() * n));
    std::copy(x.row(first), x.row(first) + p, centers.row(0));
    for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(x.row(i), centers.row(0), p);
    for (std::size_t j = 1; j < c; ++j) {
      const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
      const double target = rng.uniform01() * total;
      std::size_t pick = n;
      double cum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cum += d2[i];
        if (cum > target && d2[i] > 0.0) {
          pick = i;
          break;
        }
      }
      if (pick == n) {  // fp fallthrough: last point with positive distance
        for (std::size_t i = n; i-- > 0;)
          if (d2[i] > 0.0) {
            pick = i;
            break;
          }
      }
      std::copy(x.row(pick), x.row(pick) + p, centers.row(j));
      for (std::size_t i = 0; i < n; ++i)
        d2[i] = std::min(d2[i], squared_distance(x.row(i), centers.row(j), p));
    }

    // Lloyd iterations
    std::fill(assign.begin(), assign.end(), -1);
    for (int iter = 0; iter < config.kmeans_max_iter; ++iter) {
      bool changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        int nearest = 0;
        double nearest_d2 = squared_distance(x.row(i), centers.row(0), p);
        for (std::size_t k = 1; k < c; ++k) {
          const double d = squared_distance(x.row(i), centers.row(k), p);
          if (d < nearest_d2) {
            nearest_d2 = d;
            nearest = static_cast<int>(k);
          }
        }
        if (assign[i] != nearest) {
          assign[i] = nearest;
          changed = true;
        }
      }
      if (!changed) break;

      std::vector<std::size_t> counts(c, 0);
      Matrix sums(c, p, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        ++counts[assign[i]];
        const double* row = x.row(i);
        double* sum = sums.row(assign[i]);
        for (std::size_t j = 0; j < p; ++j) sum[j] += row[j];
      }
      for (std::size_t k = 0; k < c; ++k) {
        if (counts[k] == 0) {
          // Re-seed an emptied cluster with the point farthest from its center.
          std::size_t far = 0;
          double far_d2 = -1.0;
          for (std::size_t i = 0; i < n; ++i) {
            const double d = squared_distance(x.row(i), centers.row(assign[i]), p);
            if (d > far_d2) {
              far_d2 = d;
              far = i;
            }
          }
          std::copy(x.row(far), x.row(far) + p, centers.row(k));
        } else {
          for (std::size_t j = 0; j < p; ++j) centers(k, j) = sums(k, j) / counts[k];
        }
      }
    }

    double wcss = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      wcss += squared_distance(x.row(i), centers.row(assign[i]), p);
    if (wcss < best_wcss) {
      best_wcss = wcss;
      best_assign = assign;
    }
  }

  Responsibilities t(c, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) t(best_assign[i], i) = 1.0;
  return t;
}

FitResult em_fit(const Matrix& x, int c_count, const std::vector<Composition>& types,
                 const FitConfig& config, const std::vector<int>* labels) {
  if (c_count < 1) throw InputError("em_fit: needs at least one component");
  if (static_cast<int>(types.size()) != c_count)
    throw InputError("em_fit: one composition per component required");
  for (const auto& gamma : types)
    if (gamma.ambient() != static_cast<int>(x.cols()))
      throw InputError("em_fit: composition ambient does not match the data dimension");
  const double alpha = resolve_alpha(config.alpha, x.rows());
  const long kappa = mpsa_parameter_count(types);
  const int p = static_cast<int>(x.cols());

  Responsibilities t = initial_responsibilities(x, c_count, config, labels);
  FitResult result;
  double previous = -std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= config.max_iter; ++iter) {
    int reseeds = 0;
    const auto stats = component_stats(x, t, config.reg_eps, reseeds);
    MpsaModel model = assemble_model(stats, types, p, alpha, config.fixed_noise_variance);
    t = e_step(x, model);
    const double loglik = log_likelihood(x, model);
    result.trace.records.push_back(
        {iter, loglik, loglik - alpha * kappa, kappa, types, reseeds});
    result.model = std::move(model);
    if (config.supervised) break;
    if (iter > 1 && small_improvement(loglik, previous, config.rel_tol)) break;
    previous = loglik;
  }
  return result;
}

double component_score(const Vector& scatter_eigenvalues, const Composition& gamma,
                       std::size_t n, double pi_c, double alpha, double reg_shift) {
  const Vector averages = block_average(scatter_eigenvalues, gamma);
  double fit = 0.0;
  for (int k = 0; k < gamma.blocks(); ++k) {
    if (!(averages[k] > 0.0)) return -std::numeric_limits<double>::infinity();
    fit += gamma.parts()[k] * (std::log(averages[k]) - reg_shift / averages[k]);
  }
  return -0.5 * static_cast<double>(n) * pi_c * fit - alpha * kappa_psa(gamma);
}

Composition select_component_type(const SpectralDecomposition& scatter,
                                  const Composition& current, Strategy strategy,
                                  std::size_t n, double pi_c, double alpha,
                                  bool relative_gap_uses_component_mass,
                                  double reg_shift) {
  std::vector<Composition> candidates;
  switch (strategy) {
    case Strategy::Fixed:
      break;
    case Strategy::Relative: {
      const double n_eff =
          std::max(2.0, relative_gap_uses_component_mass ? n * pi_c : static_cast<double>(n));
      candidates.push_back(candidates_relative(scatter.eigenvalues, n_eff));
      break;
    }
    case Strategy::Hierarchical:
      candidates = candidates_hierarchical(scatter.eigenvalues);
      break;
    case Strategy::BottomUp:
    case Strategy::TopDown: {
      candidates = upper_neighbors(current);
      auto lower = lower_neighbors(current);
      candidates.insert(candidates.end(), lower.begin(), lower.end());
      break;
    }
  }

  Composition best = current;
  const double current_score =
      component_score(scatter.eigenvalues, current, n, pi_c, alpha, reg_shift);
  double best_score = current_score;
  long best_kappa = kappa_psa(current);
  for (auto& candidate : candidates) {
    const double score =
        component_score(scatter.eigenvalues, candidate, n, pi_c, alpha, reg_shift);
    const long kappa = kappa_psa(candidate);
    if (score > best_score || (score == best_score && kappa < best_kappa)) {
      best = std::move(candidate);
      best_score = score;
      best_kappa = kappa;
    }
  }
  assert(best_score >= current_score);
  return best;
}

FitResult cpem_fit(const Matrix& x, int c_count, const FitConfig& config,
                   const std::vector<int>* labels) {
  if (c_count < 1) throw InputError("cpem_fit: needs at least one component");
  const std::size_t n = x.rows();
  const int p = static_cast<int>(x.cols());
  const double alpha = resolve_alpha(config.alpha, n);

  Responsibilities t = initial_responsibilities(x, c_count, config, labels);
  std::vector<Composition> types = initial_types(config, c_count, p);

  FitResult result;
  double previous = -std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= config.max_iter; ++iter) {
    int reseeds = 0;
    const auto stats = component_stats(x, t, config.reg_eps, reseeds);
    bool changed = false;
    for (int c = 0; c < c_count; ++c) {
      Composition chosen =
          select_component_type(stats[c].scatter, types[c], config.strategy, n,
                                stats[c].weight, alpha,
                                config.relative_gap_uses_component_mass,
                                stats[c].reg_shift);
      if (!(chosen == types[c])) changed = true;
      types[c] = std::move(chosen);
    }
    MpsaModel model = assemble_model(stats, types, p, alpha, config.fixed_noise_variance);
    t = e_step(x, model);
    const double loglik = log_likelihood(x, model);
    const long kappa = mpsa_parameter_count(types);
    const double penalized = loglik - alpha * kappa;
    result.trace.records.push_back({iter, loglik, penalized, kappa, types, reseeds});
    result.model = std::move(model);
    if (config.supervised) break;
    if (iter > 1 && !changed && small_improvement(penalized, previous, config.rel_tol)) break;
    previous = penalized;
  }
  return result;
}

FitResult hdmi_fit(const Matrix& x, int c_count, double sigma2, const FitConfig& config) {
  if (c_count < 1) throw InputError("hdmi_fit: needs at least one component");
  if (!(sigma2 > 0.0)) throw InputError("hdmi_fit: sigma2 must be positive");
  const int p = static_cast<int>(x.cols());
  const double alpha = resolve_alpha(config.alpha, x.rows());

  Responsibilities t = kmeans_init(x, c_count, config);
  FitResult result;
  double previous = -std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= config.max_iter; ++iter) {
    int reseeds = 0;
    const auto stats = component_stats(x, t, config.reg_eps, reseeds);
    std::vector<Composition> types;
    types.reserve(c_count);
    for (int c = 0; c < c_count; ++c) {
      const int q = hdmi_dimension(stats[c].scatter.eigenvalues, sigma2);
      std::vector<int> parts(static_cast<std::size_t>(q), 1);
      parts.push_back(p - q);
      types.emplace_back(std::move(parts));
    }
    MpsaModel model = assemble_model(
        stats, types, p, alpha, config.fixed_noise_variance.value_or(sigma2));
    t = e_step(x, model);
    const double loglik = log_likelihood(x, model);
    const long kappa = mpsa_parameter_count(types);
    result.trace.records.push_back({iter, loglik, loglik - alpha * kappa, kappa, types, reseeds});
    result.model = std::move(model);
    if (iter > 1 && small_improvement(loglik, previous, config.rel_tol)) break;
    previous = loglik;
  }
  return result;
}

std::vector<int> predict(const Matrix& x, const MpsaModel& model) {
  const Matrix costs = cost_matrix(x, model);
  std::vector<int> labels(x.rows());
  for (std::size_t i = 0; i < costs.cols(); ++i) {
    int best = 0;
    for (std::size_t c = 1; c < costs.rows(); ++c)
      if (costs(c, i) < costs(best, i)) best = static_cast<int>(c);
    labels[i] = best + 1;
  }
  return labels;
}

Responsibilities handle_empty_component(const Matrix& x, const Responsibilities& t, int c) {
  (void)x;
  if (c < 0 || static_cast<std::size_t>(c) >= t.rows())
    throw InputError("handle_empty_component: component index out of range");
  if (t.cols() == 0) throw InputError("handle_empty_component: no samples");

  std::size_t least = 0;
  double least_max = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t.cols(); ++i) {
    double column_max = 0.0;
    for (std::size_t row = 0; row < t.rows(); ++row)
      column_max = std::max(column_max, t(row, i));
    if (column_max < least_max) {
      least_max = column_max;
      least = i;
    }
  }

  Responsibilities out = t;
  for (std::size_t row = 0; row < out.rows(); ++row) out(row, least) = 0.0;
  out(static_cast<std::size_t>(c), least) = 1.0;
  return out;
}

Responsibilities responsibilities_from_labels(const std::vector<int>& labels, int c_count) {
  Responsibilities t(static_cast<std::size_t>(c_count), labels.size(), 0.0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1 || labels[i] > c_count)
      throw InputError("responsibilities_from_labels: label out of range");
    t(static_cast<std::size_t>(labels[i] - 1), i) = 1.0;
  }
  return t;
}

}  // namespace mpsa
