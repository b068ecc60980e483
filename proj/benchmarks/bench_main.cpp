#include <benchmark/benchmark.h>

#include "ncsimo/aux_dist.hpp"
#include "ncsimo/converse.hpp"
#include "ncsimo/dof_region.hpp"
#include "ncsimo/exponent.hpp"
#include "ncsimo/mi_estimate.hpp"

namespace {

using namespace ncsimo;

ChannelConfig config(int T, int N, std::size_t trials, int workers = 1) {
  ChannelConfig cfg;
  cfg.T = T;
  cfg.N = N;
  cfg.P = 100.0;
  cfg.trials = trials;
  cfg.seed = 7;
  cfg.workers = workers;
  return cfg;
}

void BM_RankOneShapedNorm(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  Rng rng = make_stream(1, 0, 0);
  const CVector y = sample_complex_gaussian(N, rng);
  const CVector z = sample_complex_gaussian(N, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_one_shaped_norm_sq(z.data(), y.data(), N, {2.0, 0.5}));
  }
}
BENCHMARK(BM_RankOneShapedNorm)->Arg(2)->Arg(8);

void BM_RadialLogDensity(benchmark::State& state) {
  double s = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_density_radial(s, 0.3, 4, 0.2, 50.0));
    s += 1e-9;
  }
}
BENCHMARK(BM_RadialLogDensity);

void BM_RotationUnitary(benchmark::State& state) {
  Rng rng = make_stream(2, 0, 0);
  const CVector x = sample_complex_gaussian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rotation_unitary_from(x));
}
BENCHMARK(BM_RotationUnitary)->Arg(4)->Arg(16);

void BM_SingleUserBound(benchmark::State& state) {
  const ChannelConfig cfg = config(4, 2, static_cast<std::size_t>(state.range(0)));
  const InputDistribution in = isotropic_peak_input(cfg.P, cfg.P);
  const SampleSet s = generate_samples(cfg, in, nullptr, 1);
  for (auto _ : state) benchmark::DoNotOptimize(duality_bound_single_user(s, cfg).value);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SingleUserBound)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_MacBound(benchmark::State& state) {
  const bool second = state.range(0) == 1;
  const ChannelConfig cfg = second ? config(3, 4, 10000) : config(4, 2, 10000);
  const InputDistribution in = isotropic_peak_input(cfg.P, cfg.P);
  const SampleSet s = generate_samples(cfg, in, &in, 1);
  const MacRegime regime = second ? MacRegime::T_le_N : MacRegime::T_ge_N_plus_1;
  for (auto _ : state) benchmark::DoNotOptimize(duality_bound_mac_user1(s, cfg, regime).value);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 10000);
}
BENCHMARK(BM_MacBound)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SampleGeneration(benchmark::State& state) {
  const ChannelConfig cfg = config(4, 2, 10000, static_cast<int>(state.range(0)));
  const InputDistribution in = isotropic_peak_input(cfg.P, cfg.P);
  for (auto _ : state) benchmark::DoNotOptimize(generate_samples(cfg, in, &in, 1).count);
}
BENCHMARK(BM_SampleGeneration)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ContrastiveMi(benchmark::State& state) {
  const ChannelConfig cfg = config(4, 2, 4096);
  const InputDistribution in = isotropic_peak_input(cfg.P, cfg.P);
  const SampleSet s = generate_samples(cfg, in, nullptr, 1);
  for (auto _ : state) benchmark::DoNotOptimize(contrastive_mi_lower_bound(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ContrastiveMi)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_RegionGrid(benchmark::State& state) {
  for (auto _ : state) {
    for (int T = 1; T <= 16; ++T)
      for (int N = 1; N <= 8; ++N) benchmark::DoNotOptimize(regions_equal(inner_region(T, N), outer_region(T, N)));
  }
}
BENCHMARK(BM_RegionGrid)->Unit(benchmark::kMillisecond);

void BM_WeightedSumSup(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const ExponentObjective obj = natural_objective(T, N);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_sum_dof_sup({1, Rational(1, 3)}, T, N, obj).value);
}
BENCHMARK(BM_WeightedSumSup)->Args({8, 3})->Args({3, 6})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
