#include "adarft/difficulty.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace adarft {

double pass_n_difficulty(const RolloutRecord& record) {
  record.validate();
  return 100.0 * (1.0 - static_cast<double>(record.successes) /
                            static_cast<double>(record.attempts));
}

int subsample_success_count(Rng& rng, int attempts, int successes, int k) {
  // Outcomes are represented by index: positions < successes succeeded.
  // Partial Fisher-Yates over a thread-local scratch pool; the first k slots
  // end up a uniform subset.
  static thread_local std::vector<int> pool;
  pool.resize(static_cast<std::size_t>(attempts));
  std::iota(pool.begin(), pool.end(), 0);
  int hits = 0;
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(attempts - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    if (pool[static_cast<std::size_t>(i)] < successes) ++hits;
  }
  return hits;
}

ConfidenceCurve subsample_confidence(const RolloutRecord& record,
                                     std::span<const int> sample_sizes,
                                     double tolerance, int trials,
                                     std::uint64_t seed) {
  record.validate();
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (sample_sizes.empty()) throw std::invalid_argument("sample_sizes must be non-empty");
  for (std::size_t i = 0; i < sample_sizes.size(); ++i) {
    const int k = sample_sizes[i];
    if (k < 1) throw std::invalid_argument("sample sizes must be >= 1");
    if (k > record.attempts) {
      throw std::invalid_argument("sample size " + std::to_string(k) +
                                  " exceeds recorded attempts " +
                                  std::to_string(record.attempts));
    }
    if (i > 0 && sample_sizes[i] <= sample_sizes[i - 1]) {
      throw std::invalid_argument("sample sizes must be strictly increasing");
    }
  }

  const double full_rate = record.solve_rate();
  Rng rng(seed);

  ConfidenceCurve curve;
  curve.sample_sizes.assign(sample_sizes.begin(), sample_sizes.end());
  curve.tolerance = tolerance;
  curve.trials = trials;
  curve.confidence.reserve(sample_sizes.size());
  for (const int k : sample_sizes) {
    int within = 0;
    for (int t = 0; t < trials; ++t) {
      const int got = subsample_success_count(rng, record.attempts, record.successes, k);
      const double rate = static_cast<double>(got) / static_cast<double>(k);
      if (std::fabs(rate - full_rate) <= tolerance) ++within;
    }
    curve.confidence.push_back(static_cast<double>(within) / static_cast<double>(trials));
  }
  return curve;
}

double pearson_correlation(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("series lengths differ");
  if (xs.size() < 2) throw std::invalid_argument("need at least two points");
  const auto n = static_cast<double>(xs.size());

  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw std::invalid_argument("series values must be finite");
    }
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("degenerate series");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<ProblemRecord> rescale_judge_scores(std::span<const JudgeScore> scores,
                                                const DifficultyScale& target) {
  target.validate();
  std::vector<ProblemRecord> out;
  out.reserve(scores.size());
  for (const auto& score : scores) {
    score.validate();
    // Affine map of [1, 5] onto the scale; exactly the identity when the
    // target scale is [1, 5].
    const double d = target.min + (score.level - 1.0) * (target.max - target.min) / 4.0;
    out.push_back(ProblemRecord{score.problem_id, d, {}});
  }
  return out;
}

}  // namespace adarft
