#include "mpsa/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "mpsa/errors.hpp"
#include "mpsa/metrics.hpp"

namespace mpsa {

PatchSet extract_patches(const GrayImage& image, int patch_side) {
  if (patch_side < 1) throw InputError("extract_patches: patch side must be positive");
  if (patch_side > image.height || patch_side > image.width)
    throw InputError("extract_patches: patch side exceeds the image dimensions");

  const int rows = image.height - patch_side + 1;
  const int cols = image.width - patch_side + 1;
  PatchSet patches;
  patches.patch_side = patch_side;
  patches.image_height = image.height;
  patches.image_width = image.width;
  patches.data = Matrix(static_cast<std::size_t>(rows) * cols,
                        static_cast<std::size_t>(patch_side) * patch_side);
  patches.origins.reserve(static_cast<std::size_t>(rows) * cols);

  std::size_t index = 0;
  for (int r0 = 0; r0 < rows; ++r0) {
    for (int c0 = 0; c0 < cols; ++c0) {
      double* row = patches.data.row(index++);
      for (int r = 0; r < patch_side; ++r)
        for (int c = 0; c < patch_side; ++c)
          row[r * patch_side + c] = image.at(r0 + r, c0 + c);
      patches.origins.emplace_back(r0, c0);
    }
  }
  return patches;
}

double estimate_noise(const MpsaModel& model) {
  if (model.components.empty()) throw InputError("estimate_noise: model has no components");
  double sigma2 = 0.0;
  for (const auto& comp : model.components)
    sigma2 += comp.weight * comp.estimate.block_eigenvalues.back();
  return sigma2;
}

Matrix denoise_patches(const PatchSet& patches, const MpsaModel& model, double sigma2) {
  if (!(sigma2 > 0.0)) throw InputError("denoise_patches: sigma2 must be positive");
  if (static_cast<int>(patches.data.cols()) != model.ambient)
    throw InputError("denoise_patches: patch dimension does not match the model");

  const Responsibilities weights = e_step(patches.data, model);
  const std::size_t n = patches.data.rows();
  const std::size_t p = patches.data.cols();
  const int c_count = model.size();

  // Shrinkage per non-final block; negative factors (sigma2 above the block
  // eigenvalue) are clamped to keep the map a contraction.
  std::vector<Vector> shrink(static_cast<std::size_t>(c_count));
  for (int c = 0; c < c_count; ++c) {
    const PsaEstimate& est = model.components[c].estimate;
    const int d = est.composition.blocks();
    shrink[c].resize(static_cast<std::size_t>(d > 0 ? d - 1 : 0));
    for (int k = 0; k + 1 < d; ++k)
      shrink[c][k] = std::clamp(1.0 - sigma2 / est.block_eigenvalues[k], 0.0, 1.0);
  }

  Matrix denoised(n, p, 0.0);
  Vector diff(p);
  Vector coords(p);
  for (std::size_t i = 0; i < n; ++i) {
    const double* x = patches.data.row(i);
    double* out = denoised.row(i);
    for (int c = 0; c < c_count; ++c) {
      const double w = weights(c, i);
      if (w == 0.0) continue;
      const PsaEstimate& est = model.components[c].estimate;
      const Composition& gamma = est.composition;
      for (std::size_t j = 0; j < p; ++j) {
        diff[j] = x[j] - est.mean[j];
        out[j] += w * est.mean[j];
      }
      for (int k = 0; k + 1 < gamma.blocks(); ++k) {
        const double factor = shrink[c][k];
        if (factor == 0.0) continue;
        for (int col = gamma.block_begin(k); col < gamma.block_end(k); ++col) {
          double dot = 0.0;
          for (std::size_t j = 0; j < p; ++j) dot += est.basis(j, col) * diff[j];
          coords[col] = dot;
        }
        for (int col = gamma.block_begin(k); col < gamma.block_end(k); ++col) {
          const double scale = w * factor * coords[col];
          for (std::size_t j = 0; j < p; ++j) out[j] += scale * est.basis(j, col);
        }
      }
    }
  }
  return denoised;
}

GrayImage reassemble(const Matrix& denoised, const std::vector<std::pair<int, int>>& origins,
                     int height, int width) {
  if (denoised.rows() != origins.size())
    throw InputError("reassemble: one origin per patch required");
  const int patch_side = static_cast<int>(std::lround(std::sqrt(
      static_cast<double>(denoised.cols()))));
  if (static_cast<std::size_t>(patch_side) * patch_side != denoised.cols())
    throw InputError("reassemble: patch dimension is not a square");

  Vector sums(static_cast<std::size_t>(height) * width, 0.0);
  std::vector<int> counts(sums.size(), 0);
  for (std::size_t i = 0; i < denoised.rows(); ++i) {
    const auto [r0, c0] = origins[i];
    if (r0 < 0 || c0 < 0 || r0 + patch_side > height || c0 + patch_side > width)
      throw InputError("reassemble: patch origin out of bounds");
    const double* row = denoised.row(i);
    for (int r = 0; r < patch_side; ++r)
      for (int c = 0; c < patch_side; ++c) {
        const std::size_t pixel = static_cast<std::size_t>(r0 + r) * width + (c0 + c);
        sums[pixel] += row[r * patch_side + c];
        ++counts[pixel];
      }
  }

  GrayImage image;
  image.height = height;
  image.width = width;
  image.pixels.resize(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (counts[i] == 0) throw std::logic_error("reassemble: uncovered pixel");
    image.pixels[i] = std::clamp(sums[i] / counts[i], 0.0, 1.0);
  }
  return image;
}

std::string report_to_json(const DenoiseReport& report) {
  nlohmann::json doc;
  doc["version"] = "mpsa-denoise-report/1";
  doc["sigma2"] = report.sigma2;
  doc["kappa"] = report.kappa;
  nlohmann::json types = nlohmann::json::array();
  for (const auto& gamma : report.types) types.push_back(gamma.parts());
  doc["types"] = std::move(types);
  doc["component_kappa"] = report.component_kappa;
  if (report.psnr_denoised) doc["psnr"] = *report.psnr_denoised;
  if (report.psnr_noisy) doc["psnr_noisy"] = *report.psnr_noisy;
  doc["iterations"] = report.trace.records.size();
  if (!report.trace.records.empty())
    doc["penalized_loglik"] = report.trace.records.back().penalized;
  return doc.dump(2);
}

std::pair<GrayImage, DenoiseReport> denoise_image(const GrayImage& noisy, int patch_side,
                                                  int c_count, const DenoiseConfig& config,
                                                  const GrayImage* clean) {
  const PatchSet patches = extract_patches(noisy, patch_side);
  const int p = patch_side * patch_side;

  FitConfig fit_config = config.fit;
  if (config.enforce_shared_noise) {
    if (!config.sigma)
      throw InputError("denoise_image: enforcing a shared noise level needs sigma");
    fit_config.fixed_noise_variance = (*config.sigma) * (*config.sigma);
  }

  FitResult fit;
  switch (config.model) {
    case DenoiseModel::Mpsa:
      fit = cpem_fit(patches.data, c_count, fit_config);
      break;
    case DenoiseModel::GmmFull:
      fit = em_fit(patches.data, c_count,
                   std::vector<Composition>(static_cast<std::size_t>(c_count),
                                            Composition::full(p)),
                   fit_config);
      break;
    case DenoiseModel::GmmSpherical:
      fit = em_fit(patches.data, c_count,
                   std::vector<Composition>(static_cast<std::size_t>(c_count),
                                            Composition::spherical(p)),
                   fit_config);
      break;
    case DenoiseModel::Hdmi: {
      if (!config.sigma) throw InputError("denoise_image: the HDMI baseline needs sigma");
      fit = hdmi_fit(patches.data, c_count, (*config.sigma) * (*config.sigma), fit_config);
      break;
    }
  }

  const double sigma2 =
      config.sigma ? (*config.sigma) * (*config.sigma) : estimate_noise(fit.model);

  const Matrix denoised = denoise_patches(patches, fit.model, sigma2);
  GrayImage output = reassemble(denoised, patches.origins, noisy.height, noisy.width);

  DenoiseReport report;
  report.sigma2 = sigma2;
  report.types = fit.model.types();
  report.kappa = mpsa_parameter_count(report.types);
  for (const auto& gamma : report.types) report.component_kappa.push_back(kappa_psa(gamma));
  report.patch_labels = predict(patches.data, fit.model);
  report.trace = std::move(fit.trace);
  if (clean != nullptr) {
    GrayImage clamped_noisy = noisy;
    for (auto& pixel : clamped_noisy.pixels) pixel = std::clamp(pixel, 0.0, 1.0);
    report.psnr_noisy = psnr(*clean, clamped_noisy);
    report.psnr_denoised = psnr(*clean, output);
  }
  return {std::move(output), std::move(report)};
}

}  // namespace mpsa
