#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mpsa/image.hpp"
#include "mpsa/mixture.hpp"

namespace mpsa {

// All overlapping s x s patches of an image, stride 1, each vectorized
// row-major into a point of dimension p = s^2.
struct PatchSet {
  int patch_side = 0;
  int image_height = 0;
  int image_width = 0;
  Matrix data;                                // n x s^2
  std::vector<std::pair<int, int>> origins;   // top-left (row, col) per patch
};

PatchSet extract_patches(const GrayImage& image, int patch_side);

// sigma^2 = sum_c pi_c * lambda_{c, d_c}: proportion-weighted average of the
// components' smallest block eigenvalues.
double estimate_noise(const MpsaModel& model);

// Conditional-expectation denoiser: per patch, posterior-weighted sum of
// mu_c + sum_{k < d_c} clamp(1 - sigma2 / lambda_ck, 0, 1) proj_ck(x - mu_c).
// The last block of every component is treated as noise and dropped.
Matrix denoise_patches(const PatchSet& patches, const MpsaModel& model, double sigma2);

// Uniform reprojection: each pixel is the mean of all patch estimates
// covering it, clamped to [0, 1].
GrayImage reassemble(const Matrix& denoised, const std::vector<std::pair<int, int>>& origins,
                     int height, int width);

enum class DenoiseModel { Mpsa, GmmFull, GmmSpherical, Hdmi };

struct DenoiseConfig {
  FitConfig fit;
  DenoiseModel model = DenoiseModel::Mpsa;
  // Noise standard deviation for the supervised baselines; unsupervised runs
  // estimate sigma^2 from the fitted mixture instead.
  std::optional<double> sigma;
  // Pin every component's last block eigenvalue to sigma^2 after each
  // M-step (needs sigma). Off by default: the noise level is estimated
  // post hoc from the unconstrained fit.
  bool enforce_shared_noise = false;
};

struct DenoiseReport {
  double sigma2 = 0.0;
  std::vector<Composition> types;
  long kappa = 0;
  std::optional<double> psnr_noisy;     // vs clean input, when supplied
  std::optional<double> psnr_denoised;  // vs clean input, when supplied
  std::vector<int> patch_labels;        // most likely component per patch
  std::vector<long> component_kappa;    // kappa(gamma_c) per component
  FitTrace trace;
};

std::string report_to_json(const DenoiseReport& report);

// extract -> fit -> noise estimate -> denoise -> reassemble.
std::pair<GrayImage, DenoiseReport> denoise_image(const GrayImage& noisy, int patch_side,
                                                  int c_count, const DenoiseConfig& config,
                                                  const GrayImage* clean = nullptr);

}  // namespace mpsa
