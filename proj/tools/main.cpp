#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mpsa/errors.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixtures of principal subspace analyzers: generation, fitting, "
               "clustering and single-image denoising"};
  app.require_subcommand(1);

  mpsa::cli::GenerateOptions generate;
  auto* cmd_gen = app.add_subcommand("generate", "Sample a synthetic dataset from a spec");
  cmd_gen->add_option("--spec", generate.spec_path, "Spec JSON file")->required();
  cmd_gen->add_option("--out", generate.out_csv, "Output CSV path")->required();
  cmd_gen->add_option("--truth", generate.truth_path,
                      "Ground-truth model document path (default <out>.truth.json)");
  cmd_gen->add_option("--seed", generate.seed, "RNG seed");
  cmd_gen->add_option("--n", generate.n_override, "Override the spec sample count");

  mpsa::cli::FitOptions fit;
  auto* cmd_fit = app.add_subcommand("fit", "Fit a mixture to a CSV dataset");
  cmd_fit->add_option("--data", fit.data_path, "Input CSV")->required();
  cmd_fit->add_option("--components,-C", fit.components, "Number of components")->required();
  cmd_fit->add_option("--strategy", fit.strategy,
                      "hierarchical | relative | bottom-up | top-down | fixed");
  cmd_fit->add_option("--alpha", fit.alpha, "Penalty weight (number or 'bic')");
  cmd_fit->add_option("--types", fit.types,
                      "Fixed compositions: 'full', 'spherical'/'p', or '1,1;2;2'");
  cmd_fit->add_option("--init-types", fit.init_types, "auto | spherical | full");
  cmd_fit->add_option("--reg-eps", fit.reg_eps, "Covariance regularization");
  cmd_fit->add_option("--max-iter", fit.max_iter, "Iteration cap");
  cmd_fit->add_option("--tol", fit.tol, "Relative improvement tolerance");
  cmd_fit->add_option("--seed", fit.seed, "RNG seed");
  cmd_fit->add_option("--out", fit.out_model, "Output model document")->required();
  cmd_fit->add_option("--trace", fit.trace_path, "Per-iteration trace CSV");
  cmd_fit->add_flag("--relative-n-total", fit.relative_n_total,
                    "Relative-eigengap threshold uses n instead of n*pi_c");

  mpsa::cli::ClusterOptions cluster;
  auto* cmd_cluster = app.add_subcommand("cluster", "Assign samples to model components");
  cmd_cluster->add_option("--data", cluster.data_path, "Input CSV")->required();
  cmd_cluster->add_option("--model", cluster.model_path, "Model document")->required();
  cmd_cluster->add_option("--out", cluster.out_labels, "Output labels CSV")->required();
  cmd_cluster->add_option("--truth", cluster.truth_path, "True labels CSV (prints ARI)");

  mpsa::cli::DenoiseOptions denoise;
  auto* cmd_denoise = app.add_subcommand("denoise", "Denoise a grayscale PGM image");
  cmd_denoise->add_option("--in", denoise.in_pgm, "Noisy PGM image")->required();
  cmd_denoise->add_option("--out", denoise.out_pgm, "Denoised PGM output")->required();
  cmd_denoise->add_option("--patch-size,-s", denoise.patch_side, "Patch side length");
  cmd_denoise->add_option("--components,-C", denoise.components, "Number of components");
  cmd_denoise->add_option("--strategy", denoise.strategy, "Type-selection strategy");
  cmd_denoise->add_option("--model", denoise.model,
                          "mpsa | gmm-full | gmm-spherical | hdmi");
  cmd_denoise->add_option("--clean", denoise.clean_pgm, "Clean reference (enables PSNR)");
  cmd_denoise->add_option("--sigma", denoise.sigma,
                          "Known noise standard deviation (supervised)");
  cmd_denoise->add_flag("--enforce-shared-noise", denoise.enforce_shared_noise,
                        "Pin last block eigenvalues to sigma^2 during EM");
  cmd_denoise->add_option("--report", denoise.report_path, "Report JSON path");
  cmd_denoise->add_option("--patch-csv", denoise.patch_csv,
                          "Per-patch component and kappa CSV");
  cmd_denoise->add_option("--alpha", denoise.alpha, "Penalty weight (number or 'bic')");
  cmd_denoise->add_option("--reg-eps", denoise.reg_eps, "Covariance regularization");
  cmd_denoise->add_option("--max-iter", denoise.max_iter, "Iteration cap");
  cmd_denoise->add_option("--tol", denoise.tol, "Relative improvement tolerance");
  cmd_denoise->add_option("--seed", denoise.seed, "RNG seed");

  mpsa::cli::BenchmarkOptions benchmark;
  auto* cmd_benchmark = app.add_subcommand("benchmark", "Run a built-in benchmark suite");
  cmd_benchmark
      ->add_option("--suite", benchmark.suite,
                   "mpsa10 | mpsa100 | full10 | full100 | skew100 | denoise | real")
      ->required();
  cmd_benchmark->add_option("--repetitions", benchmark.repetitions, "Independent runs");
  cmd_benchmark->add_option("--seed", benchmark.seed, "RNG seed");
  cmd_benchmark->add_option("--out", benchmark.out_csv, "Results CSV")->required();
  cmd_benchmark->add_option("--data", benchmark.data_path, "Labeled CSV (real suite)");
  cmd_benchmark->add_option("--folds", benchmark.folds, "Folds for the real suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_gen->parsed()) mpsa::cli::cmd_generate(generate);
    if (cmd_fit->parsed()) mpsa::cli::cmd_fit(fit);
    if (cmd_cluster->parsed()) mpsa::cli::cmd_cluster(cluster);
    if (cmd_denoise->parsed()) mpsa::cli::cmd_denoise(denoise);
    if (cmd_benchmark->parsed()) mpsa::cli::cmd_benchmark(benchmark);
  } catch (const mpsa::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mpsa::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const mpsa::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
