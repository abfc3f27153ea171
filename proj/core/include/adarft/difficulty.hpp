// Difficulty estimation from rollout evidence: pass@n scores, subsampling
// stability curves, correlation checks against external labels, and rescaling
// of judge-assigned levels.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adarft/rng.hpp"
#include "adarft/types.hpp"

namespace adarft {

// How often a subsampled success-rate estimate stays within `tolerance` of the
// full-sample estimate, per sample size.
struct ConfidenceCurve {
  std::vector<int> sample_sizes;   // strictly increasing
  std::vector<double> confidence;  // matching fraction of trials within tolerance
  double tolerance = 0.05;
  int trials = 10;
};

// Difficulty from pass@n evidence: 100 * (1 - successes / attempts).
double pass_n_difficulty(const RolloutRecord& record);

// Successes in a size-k subset drawn without replacement from `attempts`
// recorded outcomes of which `successes` succeeded (a hypergeometric draw).
int subsample_success_count(Rng& rng, int attempts, int successes, int k);

// For each sample size k, draws `trials` subsets of size k without replacement
// from the record's outcomes and reports the fraction whose success rate lands
// within `tolerance` of the full-sample rate. The full sample size always
// scores 1. Deterministic for a fixed seed.
ConfidenceCurve subsample_confidence(const RolloutRecord& record,
                                     std::span<const int> sample_sizes,
                                     double tolerance, int trials,
                                     std::uint64_t seed);

// Sample Pearson correlation; throws "degenerate series" when either input
// has zero variance.
double pearson_correlation(std::span<const double> xs, std::span<const double> ys);

// Maps judge levels onto a difficulty scale: level 1 -> scale.min,
// level 5 -> scale.max, linear in between (the identity on [1, 5]).
std::vector<ProblemRecord> rescale_judge_scores(std::span<const JudgeScore> scores,
                                                const DifficultyScale& target);

}  // namespace adarft
