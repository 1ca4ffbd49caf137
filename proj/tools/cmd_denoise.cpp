#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "common.hpp"
#include "mpsa/denoise.hpp"
#include "mpsa/errors.hpp"
#include "mpsa/io_util.hpp"

namespace mpsa::cli {

namespace {

DenoiseModel parse_denoise_model(const std::string& name) {
  if (name == "mpsa") return DenoiseModel::Mpsa;
  if (name == "gmm-full") return DenoiseModel::GmmFull;
  if (name == "gmm-spherical") return DenoiseModel::GmmSpherical;
  if (name == "hdmi") return DenoiseModel::Hdmi;
  throw InputError("--model must be mpsa, gmm-full, gmm-spherical or hdmi");
}

std::string patch_table_csv(const DenoiseReport& report) {
  std::ostringstream out;
  out << "patch,component,component_kappa\n";
  for (std::size_t i = 0; i < report.patch_labels.size(); ++i) {
    const int c = report.patch_labels[i];
    out << i << ',' << c << ',' << report.component_kappa[c - 1] << '\n';
  }
  return out.str();
}

}  // namespace

void cmd_denoise(const DenoiseOptions& options) {
  const GrayImage noisy = read_pgm(options.in_pgm);

  DenoiseConfig config;
  config.model = parse_denoise_model(options.model);
  config.fit.strategy = parse_strategy(options.strategy);
  config.fit.alpha = parse_alpha(options.alpha);
  config.fit.reg_eps = options.reg_eps;
  config.fit.max_iter = options.max_iter;
  config.fit.rel_tol = options.tol;
  config.fit.seed = options.seed;
  config.enforce_shared_noise = options.enforce_shared_noise;
  if (options.sigma > 0.0) config.sigma = options.sigma;
  if ((config.model == DenoiseModel::Hdmi || config.enforce_shared_noise) && !config.sigma)
    throw InputError("supervised denoising (--model hdmi or --enforce-shared-noise) "
                     "requires --sigma");

  GrayImage clean;
  const bool have_clean = !options.clean_pgm.empty();
  if (have_clean) clean = read_pgm(options.clean_pgm);

  const auto [output, report] = denoise_image(noisy, options.patch_side, options.components,
                                              config, have_clean ? &clean : nullptr);
  write_pgm(output, options.out_pgm);
  if (!options.report_path.empty())
    write_file_atomic(options.report_path, report_to_json(report));
  if (!options.patch_csv.empty())
    write_file_atomic(options.patch_csv, patch_table_csv(report));

  std::cout << "denoised " << options.in_pgm << " -> " << options.out_pgm
            << " sigma2=" << report.sigma2 << " kappa=" << report.kappa
            << " types=" << format_types(report.types);
  if (report.psnr_denoised) std::cout << " psnr=" << *report.psnr_denoised;
  std::cout << "\n";
}

}  // namespace mpsa::cli
