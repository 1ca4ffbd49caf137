#pragma once

#include <string>

#include "mpsa/matrix.hpp"
#include "mpsa/rng.hpp"

namespace mpsa {

// Grayscale image, row-major pixels with nominal range [0, 1]. Intermediate
// images (e.g. after additive noise) may exceed the range; values are only
// clamped when an image is produced as output.
struct GrayImage {
  int height = 0;
  int width = 0;
  Vector pixels;

  double& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * width + c]; }
  double at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * width + c]; }
};

// P2 (ASCII) or P5 (binary) PGM with maxval up to 65535, scaled to [0, 1].
GrayImage read_pgm(const std::string& path);

// Writes binary P5 with maxval 255, rounding half-up.
void write_pgm(const GrayImage& image, const std::string& path);

// Deterministic synthetic test card: flat regions, smooth gradients, sharp
// edges and a striped texture patch, for denoising experiments.
GrayImage make_test_card(int height, int width);

GrayImage add_gaussian_noise(const GrayImage& image, double sigma, Rng& rng);

}  // namespace mpsa
