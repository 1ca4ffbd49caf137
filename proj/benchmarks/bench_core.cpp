#include <benchmark/benchmark.h>

#include "mpsa/datagen.hpp"
#include "mpsa/linalg.hpp"
#include "mpsa/mixture.hpp"

namespace {

using namespace mpsa;

Matrix random_symmetric(int p, Rng& rng) {
  Matrix a(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) {
      const double v = rng.uniform(-1.0, 1.0);
      a(i, j) = v;
      a(j, i) = v;
    }
  return a;
}

SampleResult benchmark_dataset(long n, int p, int c_count, std::uint64_t seed) {
  SyntheticSpec spec;
  spec.n = n;
  spec.p = p;
  spec.c_count = c_count;
  spec.weights.assign(c_count, 1.0 / c_count);
  spec.mean_bound = 4.0;
  for (int c = 0; c < c_count; ++c)
    spec.spectra.push_back({Composition({1, p - 1}), 2.0, 0.01, {}});
  Rng rng(seed);
  return sample_mpsa(spec, rng);
}

void BM_SymEig(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  Rng rng(7);
  const Matrix a = random_symmetric(p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sym_eig(a));
}
BENCHMARK(BM_SymEig)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_EStep(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto data = benchmark_dataset(2000, p, 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(e_step(data.x, data.truth));
}
BENCHMARK(BM_EStep)->Arg(8)->Arg(32)->Arg(64);

void BM_MStep(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto data = benchmark_dataset(2000, p, 3, 13);
  const Responsibilities t = e_step(data.x, data.truth);
  const std::vector<Composition> types(3, Composition({1, p - 1}));
  for (auto _ : state) {
    Responsibilities copy = t;
    benchmark::DoNotOptimize(m_step(data.x, copy, types, 1e-6));
  }
}
BENCHMARK(BM_MStep)->Arg(8)->Arg(32)->Arg(64);

void BM_CpemFit(benchmark::State& state) {
  const auto data = benchmark_dataset(500, 10, 3, 17);
  FitConfig config;
  config.strategy = Strategy::Hierarchical;
  for (auto _ : state) benchmark::DoNotOptimize(cpem_fit(data.x, 3, config));
}
BENCHMARK(BM_CpemFit);

void BM_KMeansInit(benchmark::State& state) {
  const auto data = benchmark_dataset(2000, 16, 3, 19);
  FitConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(kmeans_init(data.x, 3, config));
}
BENCHMARK(BM_KMeansInit);

}  // namespace

BENCHMARK_MAIN();
