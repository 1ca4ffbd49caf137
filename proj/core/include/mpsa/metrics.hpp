#pragma once

#include <vector>

#include "mpsa/image.hpp"

namespace mpsa {

// Adjusted Rand index between two labelings of the same samples; 1 iff the
// partitions agree up to relabeling. Identical trivial partitions score 1.
double ari(const std::vector<int>& a, const std::vector<int>& b);

// Mean squared pixel difference.
double mse(const GrayImage& x, const GrayImage& y);

// -10 log10(MSE); +infinity for identical images.
double psnr(const GrayImage& x, const GrayImage& y);

}  // namespace mpsa
