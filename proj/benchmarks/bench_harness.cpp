// End-to-end training-loop benchmarks across samplers and sweep sizes.
#include <benchmark/benchmark.h>

#include "adarft/harness.hpp"

using namespace adarft;

namespace {

ExperimentConfig bench_config(SamplerKind sampler, long steps) {
  ExperimentConfig cfg;
  cfg.sampler = sampler;
  cfg.scheduler.eta = 20.0;
  cfg.scheduler.batch_size = 64;
  cfg.dataset.spec.kind = DistributionKind::Uniform;
  cfg.dataset.spec.size = 2000;
  cfg.total_steps = steps;
  cfg.outcome_mode = OutcomeMode::Bernoulli;
  return cfg;
}

void BM_RunTraining(benchmark::State& state) {
  const auto cfg = bench_config(static_cast<SamplerKind>(state.range(0)),
                                static_cast<long>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_training(cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_RunTraining)
    ->Args({static_cast<long>(SamplerKind::AdaRFT), 100})
    ->Args({static_cast<long>(SamplerKind::Static), 100})
    ->Args({static_cast<long>(SamplerKind::Filtered), 100})
    ->Args({static_cast<long>(SamplerKind::FixedCurriculum), 100})
    ->Unit(benchmark::kMillisecond);

void BM_SeedSweep(benchmark::State& state) {
  const auto cfg = bench_config(SamplerKind::AdaRFT, 100);
  std::vector<std::uint64_t> seeds;
  for (long i = 0; i < state.range(0); ++i) seeds.push_back(static_cast<std::uint64_t>(i));
  for (auto _ : state) {
    benchmark::DoNotOptimize(seed_sweep(cfg, seeds));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SeedSweep)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
