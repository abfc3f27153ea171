// Microbenchmarks for the hot paths: proximity selection, uniform sampling,
// target updates, outcome simulation, and dataset generation.
#include <benchmark/benchmark.h>

#include <vector>

#include "adarft/curriculum.hpp"
#include "adarft/datagen.hpp"
#include "adarft/learner.hpp"
#include "adarft/samplers.hpp"

using namespace adarft;

namespace {

std::vector<ProblemRecord> uniform_dataset(std::size_t size) {
  DistributionSpec spec;
  spec.kind = DistributionKind::Uniform;
  spec.size = size;
  spec.seed = 7;
  return generate(spec);
}

void BM_SelectBatch(benchmark::State& state) {
  const auto data = uniform_dataset(static_cast<std::size_t>(state.range(0)));
  const int batch = static_cast<int>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(select_batch(data, 50.0, batch, seed++));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SelectBatch)->Args({1000, 64})->Args({10000, 64})->Args({10000, 1024})->Args({100000, 1024});

void BM_StaticSample(benchmark::State& state) {
  const auto data = uniform_dataset(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(static_sample(data, 1024, seed++));
  }
}
BENCHMARK(BM_StaticSample)->Arg(10000)->Arg(100000);

void BM_UpdateTarget(benchmark::State& state) {
  const SchedulerConfig cfg;
  CurriculumState st{50.0, 0};
  double r = 0.3;
  for (auto _ : state) {
    st = update_target(CurriculumState{50.0, st.step}, r, cfg);
    r = 0.3 + 0.4 * (st.step % 2);
    benchmark::DoNotOptimize(st);
  }
}
BENCHMARK(BM_UpdateTarget);

void BM_BatchOutcomes(benchmark::State& state) {
  const LearnerState learner;
  std::vector<double> difficulties;
  for (int i = 0; i < state.range(0); ++i) {
    difficulties.push_back(static_cast<double>(i % 100));
  }
  const auto mode =
      state.range(1) == 0 ? OutcomeMode::Expected : OutcomeMode::Bernoulli;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(batch_outcomes(learner, difficulties, mode, seed++));
  }
}
BENCHMARK(BM_BatchOutcomes)->Args({1024, 0})->Args({1024, 1});

void BM_Generate(benchmark::State& state) {
  DistributionSpec spec;
  spec.kind = static_cast<DistributionKind>(state.range(1));
  spec.size = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    spec.seed = seed++;
    benchmark::DoNotOptimize(generate(spec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate)
    ->Args({10000, static_cast<long>(DistributionKind::Uniform)})
    ->Args({10000, static_cast<long>(DistributionKind::SkewDifficult)});

}  // namespace
