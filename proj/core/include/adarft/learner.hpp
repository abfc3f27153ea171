// Synthetic learner: a logistic item-response surrogate for the policy being
// finetuned. Success probability depends on the gap between problem difficulty
// and latent skill, and skill grows in proportion to the batch's mean
// Bernoulli reward variance -- so batches near a 50% success rate teach the
// most, which is exactly the regime the curriculum controller steers toward.
#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace adarft {

struct LearnerState {
  double skill = 10.0;          // latent skill, difficulty units
  double discrimination = 0.1;  // logistic slope, 1 / difficulty units
  double learn_rate = 4.0;      // skill gained per unit of mean reward variance

  void validate() const;
};

// Expected: rewards are the success probabilities themselves (noise-free).
// Bernoulli: rewards are 0/1 coin flips with those probabilities.
enum class OutcomeMode { Expected, Bernoulli };

const char* to_string(OutcomeMode mode);
OutcomeMode outcome_mode_from_string(std::string_view name);

struct BatchOutcomes {
  std::vector<double> rewards;
  double r_avg = 0.0;
};

// Inputs to the KL lower bound: per-prompt success rate and the
// entropy-regularization temperature.
struct VarianceBoundInput {
  double p = 0.5;
  double tau = 1.0;

  void validate() const;
};

// p = 1 / (1 + exp(discrimination * (difficulty - skill))); 0.5 exactly at
// difficulty == skill, strictly decreasing in difficulty.
double success_prob(const LearnerState& learner, double difficulty);

// Per-problem rewards plus their mean. Deterministic for a fixed seed.
BatchOutcomes batch_outcomes(const LearnerState& learner,
                             std::span<const double> difficulties,
                             OutcomeMode mode, std::uint64_t seed);

// skill' = skill + learn_rate * mean_i[p_i * (1 - p_i)]. Skill never
// decreases; discrimination and learn_rate are unchanged.
LearnerState learner_update(const LearnerState& learner,
                            std::span<const double> difficulties);

// Lower bound on the policy-update KL divergence for Bernoulli rewards:
// p * (1 - p) / (2 * tau^2). Maximized over p at 0.5.
double kl_variance_bound(const VarianceBoundInput& input);

}  // namespace adarft
