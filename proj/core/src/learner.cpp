#include "adarft/learner.hpp"

#include <cmath>
#include <stdexcept>

#include "adarft/rng.hpp"

namespace adarft {

void LearnerState::validate() const {
  if (!std::isfinite(skill)) throw std::invalid_argument("learner skill must be finite");
  if (!(discrimination > 0.0) || !std::isfinite(discrimination)) {
    throw std::invalid_argument("learner discrimination must be a positive finite number");
  }
  if (!(learn_rate >= 0.0) || !std::isfinite(learn_rate)) {
    throw std::invalid_argument("learner learn_rate must be a non-negative finite number");
  }
}

const char* to_string(OutcomeMode mode) {
  switch (mode) {
    case OutcomeMode::Expected: return "expected";
    case OutcomeMode::Bernoulli: return "bernoulli";
  }
  return "?";
}

OutcomeMode outcome_mode_from_string(std::string_view name) {
  if (name == "expected") return OutcomeMode::Expected;
  if (name == "bernoulli") return OutcomeMode::Bernoulli;
  throw std::invalid_argument("unknown outcome mode \"" + std::string(name) +
                              "\" (expected expected or bernoulli)");
}

void VarianceBoundInput::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("success rate p must lie in [0, 1]");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("tau must be a positive finite number");
  }
}

double success_prob(const LearnerState& learner, double difficulty) {
  learner.validate();
  return 1.0 / (1.0 + std::exp(learner.discrimination * (difficulty - learner.skill)));
}

BatchOutcomes batch_outcomes(const LearnerState& learner,
                             std::span<const double> difficulties,
                             OutcomeMode mode, std::uint64_t seed) {
  learner.validate();
  if (difficulties.empty()) throw std::invalid_argument("empty batch");

  BatchOutcomes out;
  out.rewards.reserve(difficulties.size());
  Rng rng(seed);
  double sum = 0.0;
  for (const double d : difficulties) {
    const double p = success_prob(learner, d);
    const double reward =
        mode == OutcomeMode::Expected ? p : (rng.bernoulli(p) ? 1.0 : 0.0);
    out.rewards.push_back(reward);
    sum += reward;
  }
  out.r_avg = sum / static_cast<double>(difficulties.size());
  return out;
}

LearnerState learner_update(const LearnerState& learner,
                            std::span<const double> difficulties) {
  learner.validate();
  if (difficulties.empty()) throw std::invalid_argument("empty batch");

  double variance_sum = 0.0;
  for (const double d : difficulties) {
    const double p = success_prob(learner, d);
    variance_sum += p * (1.0 - p);
  }
  const double mean_variance = variance_sum / static_cast<double>(difficulties.size());

  LearnerState next = learner;
  next.skill = learner.skill + learner.learn_rate * mean_variance;
  return next;
}

double kl_variance_bound(const VarianceBoundInput& input) {
  input.validate();
  return input.p * (1.0 - input.p) / (2.0 * input.tau * input.tau);
}

}  // namespace adarft
