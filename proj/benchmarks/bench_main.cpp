#include <benchmark/benchmark.h>

#include <cstdint>

#include "ineq/bias.hpp"
#include "ineq/distributions.hpp"
#include "ineq/estimators.hpp"
#include "ineq/index.hpp"
#include "ineq/mc_harness.hpp"
#include "ineq/random.hpp"

namespace {

ineq::Sample make_sample(std::int64_t n) {
  ineq::Rng rng(ineq::derive_seed(11, static_cast<std::uint64_t>(n)));
  return ineq::gamma_sample({2.0, 1.0}, rng, static_cast<std::size_t>(n));
}

void BM_IHatPairwise(benchmark::State& state) {
  const ineq::Sample s = make_sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ineq::i_hat(s, ineq::LambdaWeight(0.5)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IHatPairwise)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_IHatFast(benchmark::State& state) {
  const ineq::Sample s = make_sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ineq::i_hat_fast(s, ineq::LambdaWeight(0.5)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IHatFast)->RangeMultiplier(4)->Range(16, 65536)->Complexity();

void BM_GammaIndex(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0)) / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(ineq::gamma_index(alpha, ineq::LambdaWeight(0.5)));
}
BENCHMARK(BM_GammaIndex)->Arg(1)->Arg(4)->Arg(20);

void BM_ExpectedIHat(benchmark::State& state) {
  const ineq::BiasQuery q{2.0, 0.5, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(ineq::expected_i_hat(q));
}
BENCHMARK(BM_ExpectedIHat)->Arg(10)->Arg(120)->Arg(1000);

// One cell of the simulation study at the full replication count.
void BM_RunScenario(benchmark::State& state) {
  const ineq::SimConfig c{2.0, 0.5, static_cast<int>(state.range(0)), 1000, 42};
  for (auto _ : state) benchmark::DoNotOptimize(ineq::run_scenario(c));
}
BENCHMARK(BM_RunScenario)->Arg(10)->Arg(120)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
