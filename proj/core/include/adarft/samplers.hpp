// Baseline batch samplers compared against the adaptive curriculum: plain
// uniform sampling, pass@k-filtered sampling, and a fixed linear schedule.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adarft/curriculum.hpp"
#include "adarft/types.hpp"

namespace adarft {

enum class SamplerKind { AdaRFT, Static, Filtered, FixedCurriculum };

const char* to_string(SamplerKind kind);
SamplerKind sampler_kind_from_string(std::string_view name);  // throws on unknown names

// Linear target schedule T(s) = t_min + (t_max - t_min) * s / total_steps,
// defined for s in [0, total_steps]. Callers that run past the schedule hold
// the target at t_max.
struct FixedCurriculumConfig {
  double t_min = 0.0;
  double t_max = 100.0;
  long total_steps = 1;

  void validate() const;
};

// pass@k retention window: problems whose solve rate falls at or outside
// [low, high] are dropped.
struct FilterThresholds {
  double low = 0.10;
  double high = 0.90;
  int attempts = 40;

  void validate() const;
};

// Uniform batch without replacement (within the batch; independent across
// calls). Deltas are zero-filled since there is no target notion.
BatchSelection static_sample(std::span<const ProblemRecord> dataset, int batch_size,
                             std::uint64_t seed);

// Ids whose solve rate lies strictly inside (low, high), in input order.
// Duplicate problem ids are an error.
std::vector<std::string> filter_dataset(std::span<const RolloutRecord> rollouts,
                                        const FilterThresholds& thresholds);

// Schedule value at step s; throws if s is outside [0, total_steps].
double fixed_curriculum_target(const FixedCurriculumConfig& cfg, long step);

}  // namespace adarft
