// Shared domain types: training problems, difficulty scales, and the raw
// evidence records (rollouts, judge scores) that difficulty estimates are
// built from.
#pragma once

#include <span>
#include <string>
#include <vector>

namespace adarft {

// One training item. `difficulty` is a fixed scalar on the dataset's
// difficulty scale; it is estimated offline and never changes during a run.
struct ProblemRecord {
  std::string id;
  double difficulty = 0.0;
  std::vector<std::string> tags;
};

// Closed interval [min, max] that problem difficulties and the curriculum
// target live on.
struct DifficultyScale {
  double min = 0.0;
  double max = 100.0;

  double span() const { return max - min; }
  double clamp(double v) const { return v < min ? min : (v > max ? max : v); }
  bool contains(double v) const { return v >= min && v <= max; }

  void validate() const;  // throws std::invalid_argument

  // Smallest scale covering every difficulty in the dataset.
  static DifficultyScale from_dataset(std::span<const ProblemRecord> dataset);
};

// pass@n evidence for one problem: `attempts` rollouts, `successes` of which
// were judged correct.
struct RolloutRecord {
  std::string problem_id;
  int attempts = 0;
  int successes = 0;

  double solve_rate() const { return static_cast<double>(successes) / attempts; }
  void validate() const;
};

// Judge-assigned difficulty level on the 1..5 ladder, half points allowed.
struct JudgeScore {
  std::string problem_id;
  double level = 1.0;

  void validate() const;
};

// Checks the dataset-wide invariants: unique ids, finite difficulties.
void validate_dataset(std::span<const ProblemRecord> dataset);

}  // namespace adarft
