#include <benchmark/benchmark.h>

#include <random>

#include "bwak/env.hpp"
#include "bwak/harness.hpp"
#include "bwak/oracle.hpp"

namespace {

using namespace bwak;

InstanceConfig NineArm() {
  InstanceConfig inst;
  inst.arms = {{0.35, 0.25}, {0.45, 0.3}, {0.52, 0.4}, {0.72, 0.6},
               {0.84, 0.7},  {0.9, 0.75}, {0.92, 0.8}, {0.9, 0.85}};
  inst.c = 0.5;
  inst.seed = 1;
  return inst;
}

void BM_SolveOptLp(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> mu(k), rho(k);
  for (std::size_t i = 0; i < k; ++i) {
    mu[i] = unit(rng);
    rho[i] = unit(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_opt_lp(mu, rho, 0.5));
}
BENCHMARK(BM_SolveOptLp)->Arg(3)->Arg(8)->Arg(32);

void BM_EnvironmentSample(benchmark::State& state) {
  InstanceConfig inst = NineArm();
  inst.family = static_cast<Family>(state.range(0));
  Environment env(inst, 11);
  ArmIndex arm = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(env.sample(arm));
    arm = (arm + 1) % inst.num_arms();
  }
}
BENCHMARK(BM_EnvironmentSample)->Arg(0)->Arg(1)->Arg(2);

void BM_TrialRounds(benchmark::State& state) {
  const auto kind = static_cast<PolicyKind>(state.range(0));
  const InstanceConfig inst = NineArm();
  constexpr std::uint64_t kHorizon = 100'000;
  for (auto _ : state) benchmark::DoNotOptimize(run_trial(kind, inst, kHorizon, 0));
  state.SetItemsProcessed(state.iterations() * kHorizon);
}
BENCHMARK(BM_TrialRounds)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
