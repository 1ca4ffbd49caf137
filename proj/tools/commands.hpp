#pragma once

#include <cstdint>
#include <string>

namespace mpsa::cli {

struct GenerateOptions {
  std::string spec_path;
  std::string out_csv;
  std::string truth_path;  // defaults to <out>.truth.json
  std::uint64_t seed = 0;
  long n_override = 0;  // 0 keeps the spec value
};
void cmd_generate(const GenerateOptions& options);

struct FitOptions {
  std::string data_path;
  int components = 1;
  std::string strategy = "hierarchical";
  std::string alpha = "bic";
  std::string types;  // non-empty selects the fixed-type EM
  std::string init_types = "auto";
  double reg_eps = 1e-6;
  int max_iter = 200;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  std::string out_model;
  std::string trace_path;
  bool relative_n_total = false;  // threshold uses n instead of n * pi_c
};
void cmd_fit(const FitOptions& options);

struct ClusterOptions {
  std::string data_path;
  std::string model_path;
  std::string out_labels;
  std::string truth_path;  // when given, prints the ARI against it
};
void cmd_cluster(const ClusterOptions& options);

struct DenoiseOptions {
  std::string in_pgm;
  std::string out_pgm;
  int patch_side = 8;
  int components = 3;
  std::string strategy = "bottom-up";
  std::string model = "mpsa";
  std::string clean_pgm;
  double sigma = 0.0;  // 0 means unsupervised
  bool enforce_shared_noise = false;
  std::string report_path;
  std::string patch_csv;
  std::string alpha = "bic";
  double reg_eps = 1e-6;
  int max_iter = 200;
  double tol = 1e-6;
  std::uint64_t seed = 0;
};
void cmd_denoise(const DenoiseOptions& options);

struct BenchmarkOptions {
  std::string suite;
  int repetitions = 10;
  std::uint64_t seed = 0;
  std::string out_csv;
  std::string data_path;  // labeled CSV for the "real" suite
  int folds = 10;
};
void cmd_benchmark(const BenchmarkOptions& options);

}  // namespace mpsa::cli
