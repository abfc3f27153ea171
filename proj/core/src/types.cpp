#include "adarft/types.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace adarft {

void DifficultyScale::validate() const {
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw std::invalid_argument("difficulty scale bounds must be finite");
  }
  if (!(min < max)) {
    throw std::invalid_argument("difficulty scale requires min < max");
  }
}

DifficultyScale DifficultyScale::from_dataset(std::span<const ProblemRecord> dataset) {
  if (dataset.empty()) throw std::invalid_argument("empty dataset");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& rec : dataset) {
    if (!std::isfinite(rec.difficulty)) {
      throw std::invalid_argument("non-finite difficulty for problem \"" + rec.id + "\"");
    }
    lo = std::min(lo, rec.difficulty);
    hi = std::max(hi, rec.difficulty);
  }
  DifficultyScale scale{lo, hi};
  scale.validate();  // rejects the all-equal degenerate case
  return scale;
}

void RolloutRecord::validate() const {
  if (attempts < 1) {
    throw std::invalid_argument("rollout for \"" + problem_id + "\": attempts must be >= 1");
  }
  if (successes < 0 || successes > attempts) {
    throw std::invalid_argument("rollout for \"" + problem_id +
                                "\": successes must lie in [0, attempts]");
  }
}

void JudgeScore::validate() const {
  if (!(level >= 1.0 && level <= 5.0)) {
    throw std::invalid_argument("judge level outside [1, 5] for \"" + problem_id + "\"");
  }
  const double doubled = level * 2.0;
  if (doubled != std::floor(doubled)) {
    throw std::invalid_argument("judge level for \"" + problem_id +
                                "\" is not on the half-point ladder");
  }
}

void validate_dataset(std::span<const ProblemRecord> dataset) {
  std::unordered_set<std::string> seen;
  seen.reserve(dataset.size());
  for (const auto& rec : dataset) {
    if (rec.id.empty()) throw std::invalid_argument("problem with empty id");
    if (!std::isfinite(rec.difficulty)) {
      throw std::invalid_argument("non-finite difficulty for problem \"" + rec.id + "\"");
    }
    if (!seen.insert(rec.id).second) {
      throw std::invalid_argument("duplicate problem id \"" + rec.id + "\"");
    }
  }
}

}  // namespace adarft
