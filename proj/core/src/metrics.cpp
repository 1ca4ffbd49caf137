#include "mpsa/metrics.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

#include "mpsa/errors.hpp"

namespace mpsa {

namespace {

double comb2(double x) { return 0.5 * x * (x - 1.0); }

std::vector<int> compact_labels(const std::vector<int>& labels, int& classes) {
  std::unordered_map<int, int> ids;
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto [it, inserted] = ids.try_emplace(labels[i], static_cast<int>(ids.size()));
    out[i] = it->second;
  }
  classes = static_cast<int>(ids.size());
  return out;
}

}  // namespace

double ari(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw InputError("ari: labelings have different lengths");
  if (a.empty()) throw InputError("ari: empty labelings");
  const double n = static_cast<double>(a.size());

  int ka = 0, kb = 0;
  const std::vector<int> ca = compact_labels(a, ka);
  const std::vector<int> cb = compact_labels(b, kb);

  Matrix contingency(static_cast<std::size_t>(ka), static_cast<std::size_t>(kb), 0.0);
  std::vector<double> row_sums(static_cast<std::size_t>(ka), 0.0);
  std::vector<double> col_sums(static_cast<std::size_t>(kb), 0.0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    contingency(ca[i], cb[i]) += 1.0;
    row_sums[ca[i]] += 1.0;
    col_sums[cb[i]] += 1.0;
  }

  double index = 0.0;
  for (double cell : contingency.entries()) index += comb2(cell);
  double sum_a = 0.0, sum_b = 0.0;
  for (double r : row_sums) sum_a += comb2(r);
  for (double c : col_sums) sum_b += comb2(c);

  const double expected = sum_a * sum_b / comb2(n);
  const double max_index = 0.5 * (sum_a + sum_b);
  const double denom = max_index - expected;
  if (denom == 0.0) {
    // Both partitions trivial; identical partitions define perfect agreement.
    bool identical = true;
    for (std::size_t i = 0; i < ca.size() && identical; ++i)
      identical = ca[i] == cb[i];
    return identical ? 1.0 : 0.0;
  }
  return (index - expected) / denom;
}

double mse(const GrayImage& x, const GrayImage& y) {
  if (x.height != y.height || x.width != y.width)
    throw InputError("mse: image dimensions differ");
  if (x.pixels.empty()) throw InputError("mse: empty images");
  double sum = 0.0;
  for (std::size_t i = 0; i < x.pixels.size(); ++i) {
    const double d = x.pixels[i] - y.pixels[i];
    sum += d * d;
  }
  return sum / static_cast<double>(x.pixels.size());
}

double psnr(const GrayImage& x, const GrayImage& y) {
  const double err = mse(x, y);
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return -10.0 * std::log10(err);
}

}  // namespace mpsa
