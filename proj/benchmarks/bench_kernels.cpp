// Structured kernels against their dense counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "baker/alphabet.hpp"
#include "baker/cantor_dft.hpp"
#include "baker/cutoff.hpp"
#include "baker/dft.hpp"
#include "baker/fup.hpp"
#include "baker/quantize.hpp"
#include "baker/spectral.hpp"

using namespace baker;

namespace {

CVector random_vector(Eigen::Index n) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> d;
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = {d(gen), d(gen)};
  return v;
}

const Alphabet kMiddleThird = Alphabet::create(3, {0, 2});

void BM_CantorDftApply(benchmark::State& state) {
  const CantorDft op(kMiddleThird, static_cast<int>(state.range(0)));
  const CVector v = random_vector(static_cast<Eigen::Index>(op.dimension()));
  for (auto _ : state) benchmark::DoNotOptimize(op.apply(v));
  state.counters["dim"] = static_cast<double>(op.dimension());
}
BENCHMARK(BM_CantorDftApply)->DenseRange(6, 12, 2);

void BM_DenseRestrictedApply(benchmark::State& state) {
  const auto c = cantor_set(kMiddleThird, static_cast<int>(state.range(0)));
  const CMatrix m = restricted_dft_matrix(c.points, c.points, c.modulus);
  const CVector v = random_vector(m.cols());
  for (auto _ : state) benchmark::DoNotOptimize((m * v).eval());
  state.counters["dim"] = static_cast<double>(m.cols());
}
BENCHMARK(BM_DenseRestrictedApply)->DenseRange(6, 10, 2);

void BM_RNorm(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(r_norm(kMiddleThird, k));
}
BENCHMARK(BM_RNorm)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_MapApply(benchmark::State& state) {
  const QuantumMap map(kMiddleThird, static_cast<int>(state.range(0)), cutoff_tau(0.05), cutoff_tau(0.05));
  const CVector v = random_vector(static_cast<Eigen::Index>(map.dimension()));
  for (auto _ : state) benchmark::DoNotOptimize(map.apply(v));
  state.counters["N"] = static_cast<double>(map.dimension());
}
BENCHMARK(BM_MapApply)->DenseRange(4, 7);

void BM_MapDenseMatvec(benchmark::State& state) {
  const auto map = build_map(kMiddleThird, static_cast<int>(state.range(0)), cutoff_tau(0.05), cutoff_tau(0.05));
  const CVector v = random_vector(static_cast<Eigen::Index>(map.dimension()));
  for (auto _ : state) benchmark::DoNotOptimize((*map.dense() * v).eval());
  state.counters["N"] = static_cast<double>(map.dimension());
}
BENCHMARK(BM_MapDenseMatvec)->DenseRange(4, 7);

void BM_TrimmedSpectrum(benchmark::State& state) {
  const auto a = Alphabet::create(4, {1, 2});
  for (auto _ : state) {
    const auto map = build_trimmed(a, static_cast<int>(state.range(0)), cutoff_tau(0.05), cutoff_tau(0.05));
    benchmark::DoNotOptimize(spectral_radius(eigenvalues(map)));
  }
}
BENCHMARK(BM_TrimmedSpectrum)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
