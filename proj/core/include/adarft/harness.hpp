// Experiment harness: runs the curriculum loop end-to-end against the
// synthetic learner with any sampler, records per-step telemetry, and
// computes the reporting metrics (smoothed series, extra-steps-to-match,
// ablation and seed-sweep aggregates).
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adarft/curriculum.hpp"
#include "adarft/datagen.hpp"
#include "adarft/learner.hpp"
#include "adarft/samplers.hpp"

namespace adarft {

// Where training problems come from: a dataset file, or an on-the-fly
// generation spec. When `derive_generation_seed` is set the generation seed is
// derived from the run's master seed, so seed sweeps redraw the data; an
// explicit spec.seed pins the dataset across seeds.
struct DatasetSource {
  enum class Kind { File, Generate };
  Kind kind = Kind::Generate;
  std::string path;
  DistributionSpec spec;
  bool derive_generation_seed = true;
};

struct ExperimentConfig {
  SchedulerConfig scheduler;
  SamplerKind sampler = SamplerKind::AdaRFT;
  FixedCurriculumConfig fixed_curriculum;  // FixedCurriculum sampler only
  FilterThresholds filter;                 // Filtered sampler only
  int exclusion_window = 0;  // skip ids selected in the last W steps (proximity samplers)
  LearnerState learner;
  DatasetSource dataset;
  long total_steps = 100;
  long eval_every = 5;
  OutcomeMode outcome_mode = OutcomeMode::Expected;
  double smoothing = 0.3;
  std::uint64_t seed = 0;  // master seed; every stream in the run derives from it

  // Resolution flags, cleared in the snapshot stored on RunResult:
  // derive the scheduler scale from the realized dataset's min/max, and the
  // fixed-curriculum schedule from that scale plus total_steps.
  bool derive_scale_from_data = false;
  bool derive_fixed_curriculum = true;

  void validate() const;
};

// One step of telemetry. For the Static and Filtered samplers, which have no
// target notion, both target fields hold the scheduler's t_init; for the
// fixed curriculum they hold the schedule value before/after the step.
// learner_skill is the skill after the step's update. batch_cost is the sum
// of batch difficulties, a stand-in for per-step compute (harder problems
// cost more to roll out).
struct StepMetrics {
  long step = 0;  // 1-based
  double target_before = 0.0;
  double target_after = 0.0;
  double r_avg = 0.0;
  double batch_mean_difficulty = 0.0;
  double learner_skill = 0.0;
  double batch_cost = 0.0;
};

// Steady-state figures are means over the final min(50, total_steps) steps.
struct RunSummary {
  double final_skill = 0.0;
  double final_smoothed_skill = 0.0;
  double steady_r_avg = 0.0;
  double steady_batch_difficulty = 0.0;
  double total_batch_cost = 0.0;
};

struct RunResult {
  ExperimentConfig config;  // fully resolved snapshot (flags cleared, seeds pinned)
  std::vector<StepMetrics> metrics;
  std::vector<double> smoothed_skill;
  RunSummary summary;
};

// Runs the loop: select batch -> compute outcomes -> learner update ->
// (adaptive sampler only) target update. Bit-reproducible for an identical
// config including the master seed. Errors from inside the loop are rethrown
// with the step index attached.
RunResult run_training(const ExperimentConfig& cfg);

// Exponential smoothing: y_0 = x_0, y_t = s * x_t + (1 - s) * y_{t-1}.
// s = 1 reproduces the raw series.
std::vector<double> smooth_series(std::span<const double> xs, double smoothing);

// Additional steps the candidate needs to reach the reference run's smoothed
// skill at `at_step`. Crossings are only evaluated at multiples of the runs'
// eval cadence; nullopt means the candidate never gets there within its
// horizon. A candidate that crosses before at_step yields a negative count.
std::optional<long> extra_steps_to_match(const RunResult& reference,
                                         const RunResult& candidate,
                                         long at_step, double smoothing);

// Runs several configs concurrently (each run is internally sequential and
// owns its seed-derived streams); results come back in input order.
std::vector<RunResult> run_many(std::span<const ExperimentConfig> configs);

struct Aggregate {
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;  // sample stddev; 0 for a single run
};

struct SweepStats {
  std::size_t runs = 0;
  Aggregate final_skill;
  Aggregate final_smoothed_skill;
  Aggregate steady_r_avg;
  Aggregate total_batch_cost;
};

// Independent runs of cfg with each master seed; aggregation is
// order-invariant (values are sorted before reduction).
SweepStats seed_sweep(const ExperimentConfig& cfg, std::span<const std::uint64_t> seeds);

struct BetaSummary {
  double beta = 0.0;
  double mean_final_skill = 0.0;
  double mean_steady_r_avg = 0.0;
};

// Cross product of betas x seeds on top of `base`; one summary row per beta.
std::vector<BetaSummary> beta_ablation(const ExperimentConfig& base,
                                       std::span<const double> betas,
                                       std::span<const std::uint64_t> seeds);

}  // namespace adarft
