#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "mpsa/csv.hpp"
#include "mpsa/datagen.hpp"
#include "mpsa/denoise.hpp"
#include "mpsa/errors.hpp"
#include "mpsa/io_util.hpp"
#include "mpsa/metrics.hpp"

namespace mpsa::cli {

namespace {

struct CellStats {
  Vector values;
  double mean() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / values.size();
  }
  double stddev() const {
    const double m = mean();
    double sum = 0.0;
    for (double v : values) sum += (v - m) * (v - m);
    return std::sqrt(sum / values.size());
  }
};

struct ResultRow {
  std::string model;
  CellStats penalized;
  CellStats ari_scores;
  CellStats psnr_scores;
};

std::string format_cell(const CellStats& cell) {
  if (cell.values.empty()) return ",";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g,%.6g", cell.mean(), cell.stddev());
  return buffer;
}

SyntheticSpec density_suite_spec(const std::string& suite) {
  // Density benchmark family: C = 3, n = 1000, means uniform on [-5, 5]^p,
  // leading eigenvalues (3, 2, 1), spectrum ratio 0.01.
  SyntheticSpec spec;
  spec.n = 1000;
  spec.c_count = 3;
  spec.weights = {0.4, 0.3, 0.3};
  spec.mean_bound = 5.0;
  const Vector lambda1 = {3.0, 2.0, 1.0};

  int p = 0;
  std::vector<std::vector<int>> types;
  if (suite == "mpsa10") {
    p = 10;
    types = {{1, 9}, {1, 2, 7}, {1, 2, 4, 3}};
  } else if (suite == "mpsa100") {
    p = 100;
    types = {{1, 99}, {1, 2, 97}, {1, 2, 4, 93}};
  } else if (suite == "full10" || suite == "full100" || suite == "skew100") {
    p = suite == "full10" ? 10 : 100;
    types.assign(3, std::vector<int>(static_cast<std::size_t>(p), 1));
  } else {
    throw InputError("unknown suite '" + suite +
                     "' (expected mpsa10, mpsa100, full10, full100, skew100, denoise or real)");
  }
  spec.p = p;
  for (int c = 0; c < 3; ++c)
    spec.spectra.push_back({Composition(types[c]), lambda1[c], 0.01, {}});
  if (suite == "skew100") spec.skew_shape.assign(static_cast<std::size_t>(p), 1.0);
  return spec;
}

struct ModelRunner {
  std::string name;
  Strategy strategy = Strategy::Fixed;
  bool fixed_full = false;  // fixed runs: full vs spherical types
};

const std::vector<ModelRunner> kSyntheticModels = {
    {"MPSA-H", Strategy::Hierarchical, false}, {"MPSA-R", Strategy::Relative, false},
    {"MPSA-U", Strategy::BottomUp, false},     {"MPSA-D", Strategy::TopDown, false},
    {"GMM-F", Strategy::Fixed, true},          {"GMM-S", Strategy::Fixed, false},
};

FitResult run_model(const ModelRunner& runner, const Matrix& x, int c_count,
                    std::uint64_t seed) {
  FitConfig config;
  config.seed = seed;
  const int p = static_cast<int>(x.cols());
  if (runner.strategy == Strategy::Fixed) {
    const Composition gamma = runner.fixed_full ? Composition::full(p)
                                                : Composition::spherical(p);
    return em_fit(x, c_count, std::vector<Composition>(c_count, gamma), config);
  }
  config.strategy = runner.strategy;
  return cpem_fit(x, c_count, config);
}

void run_synthetic(const BenchmarkOptions& options, std::vector<ResultRow>& rows) {
  const SyntheticSpec spec = density_suite_spec(options.suite);
  for (const auto& runner : kSyntheticModels) rows.push_back({runner.name, {}, {}, {}});

  for (int rep = 0; rep < options.repetitions; ++rep) {
    Rng rng(options.seed, static_cast<std::uint64_t>(rep));
    const SampleResult data = sample_mpsa(spec, rng);
    const double alpha = resolve_alpha(FitConfig::kAlphaBic, data.x.rows());
    for (std::size_t m = 0; m < kSyntheticModels.size(); ++m) {
      const FitResult fit =
          run_model(kSyntheticModels[m], data.x, spec.c_count, options.seed + rep);
      rows[m].penalized.values.push_back(
          penalized_loglik(data.x, fit.model, alpha) / static_cast<double>(data.x.rows()));
      rows[m].ari_scores.values.push_back(ari(predict(data.x, fit.model), data.labels));
    }
  }
}

void run_denoise(const BenchmarkOptions& options, std::vector<ResultRow>& rows) {
  const double sigma = 30.0 / 255.0;
  const int patch_side = 8;
  const int c_count = 3;
  const GrayImage clean = make_test_card(128, 128);

  const std::vector<std::pair<std::string, DenoiseModel>> models = {
      {"MPSA-U", DenoiseModel::Mpsa},
      {"GMM-F", DenoiseModel::GmmFull},
      {"GMM-S", DenoiseModel::GmmSpherical},
      {"HDMI", DenoiseModel::Hdmi},
  };
  for (const auto& [name, model] : models) rows.push_back({name, {}, {}, {}});

  for (int rep = 0; rep < options.repetitions; ++rep) {
    Rng rng(options.seed, static_cast<std::uint64_t>(rep));
    const GrayImage noisy = add_gaussian_noise(clean, sigma, rng);
    for (std::size_t m = 0; m < models.size(); ++m) {
      DenoiseConfig config;
      config.model = models[m].second;
      config.fit.strategy = Strategy::BottomUp;
      config.fit.seed = options.seed + rep;
      if (config.model == DenoiseModel::Hdmi) config.sigma = sigma;
      const auto [output, report] =
          denoise_image(noisy, patch_side, c_count, config, &clean);
      rows[m].psnr_scores.values.push_back(*report.psnr_denoised);
    }
  }
}

// Stratified fold assignment: indices grouped by label, shuffled, dealt
// round-robin.
std::vector<int> stratified_folds(const std::vector<int>& labels, int folds, Rng& rng) {
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(i);
  std::vector<int> fold_of(labels.size(), 0);
  for (auto& [label, indices] : groups) {
    for (std::size_t i = indices.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(rng.uniform01() * i);
      std::swap(indices[i - 1], indices[j]);
    }
    for (std::size_t i = 0; i < indices.size(); ++i)
      fold_of[indices[i]] = static_cast<int>(i % folds);
  }
  return fold_of;
}

void run_real(const BenchmarkOptions& options, std::vector<ResultRow>& rows) {
  if (options.data_path.empty())
    throw InputError("the real suite needs --data with a labeled CSV");
  const Dataset dataset = read_dataset_csv(options.data_path);
  if (!dataset.has_labels())
    throw InputError(options.data_path + ": the real suite needs a label column");

  std::map<int, int> classes;
  for (int label : dataset.labels) classes.emplace(label, 0);
  int next = 1;
  for (auto& [label, id] : classes) id = next++;
  const int c_count = static_cast<int>(classes.size());

  Rng fold_rng(options.seed);
  const std::vector<int> fold_of = stratified_folds(dataset.labels, options.folds, fold_rng);

  for (const auto& runner : kSyntheticModels) rows.push_back({runner.name, {}, {}, {}});

  for (int fold = 0; fold < options.folds; ++fold) {
    std::vector<std::size_t> train;
    for (std::size_t i = 0; i < dataset.x.rows(); ++i)
      if (fold_of[i] != fold) train.push_back(i);
    Matrix x(train.size(), dataset.x.cols());
    std::vector<int> truth(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) {
      std::copy(dataset.x.row(train[i]), dataset.x.row(train[i]) + dataset.x.cols(), x.row(i));
      truth[i] = classes[dataset.labels[train[i]]];
    }
    const double alpha = resolve_alpha(FitConfig::kAlphaBic, x.rows());
    for (std::size_t m = 0; m < kSyntheticModels.size(); ++m) {
      const FitResult fit =
          run_model(kSyntheticModels[m], x, c_count, options.seed + fold);
      rows[m].penalized.values.push_back(penalized_loglik(x, fit.model, alpha) /
                                         static_cast<double>(x.rows()));
      rows[m].ari_scores.values.push_back(ari(predict(x, fit.model), truth));
    }
  }
}

}  // namespace

void cmd_benchmark(const BenchmarkOptions& options) {
  if (options.repetitions < 1) throw InputError("--repetitions must be positive");

  std::vector<ResultRow> rows;
  if (options.suite == "denoise") {
    run_denoise(options, rows);
  } else if (options.suite == "real") {
    run_real(options, rows);
  } else {
    run_synthetic(options, rows);
  }

  std::ostringstream out;
  out << "suite,model,repetitions,penalized_ll_mean,penalized_ll_std,"
         "ari_mean,ari_std,psnr_mean,psnr_std\n";
  for (const auto& row : rows) {
    const std::size_t reps = std::max({row.penalized.values.size(),
                                       row.ari_scores.values.size(),
                                       row.psnr_scores.values.size()});
    out << options.suite << ',' << row.model << ',' << reps << ','
        << format_cell(row.penalized) << ',' << format_cell(row.ari_scores) << ','
        << format_cell(row.psnr_scores) << '\n';
  }
  write_file_atomic(options.out_csv, out.str());
  std::cout << "wrote benchmark results for suite " << options.suite << " to "
            << options.out_csv << "\n";
}

}  // namespace mpsa::cli
