#include "adarft/samplers.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "adarft/log.hpp"
#include "adarft/rng.hpp"

namespace adarft {

const char* to_string(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::AdaRFT: return "adarft";
    case SamplerKind::Static: return "static";
    case SamplerKind::Filtered: return "filtered";
    case SamplerKind::FixedCurriculum: return "fixed-curriculum";
  }
  return "?";
}

SamplerKind sampler_kind_from_string(std::string_view name) {
  if (name == "adarft") return SamplerKind::AdaRFT;
  if (name == "static") return SamplerKind::Static;
  if (name == "filtered") return SamplerKind::Filtered;
  if (name == "fixed-curriculum") return SamplerKind::FixedCurriculum;
  throw std::invalid_argument("unknown sampler kind \"" + std::string(name) +
                              "\" (expected adarft, static, filtered, or fixed-curriculum)");
}

void FixedCurriculumConfig::validate() const {
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max)) {
    throw std::invalid_argument("fixed curriculum requires finite t_min < t_max");
  }
  if (total_steps < 1) {
    throw std::invalid_argument("fixed curriculum total_steps must be >= 1");
  }
}

void FilterThresholds::validate() const {
  if (!(low >= 0.0 && low <= 1.0) || !(high >= 0.0 && high <= 1.0)) {
    throw std::invalid_argument("filter thresholds must lie in [0, 1]");
  }
  if (!(low < high)) {
    throw std::invalid_argument("filter requires low < high");
  }
  if (attempts < 1) {
    throw std::invalid_argument("filter attempts must be >= 1");
  }
}

BatchSelection static_sample(std::span<const ProblemRecord> dataset, int batch_size,
                             std::uint64_t seed) {
  if (dataset.empty()) throw std::invalid_argument("empty dataset");
  if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");

  const std::size_t n = dataset.size();
  std::size_t take = static_cast<std::size_t>(batch_size);
  if (take > n) {
    log_warn("batch size " + std::to_string(take) + " exceeds dataset size " +
             std::to_string(n) + "; clamping to the dataset");
    take = n;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  // Partial Fisher-Yates: the first `take` slots end up a uniform sample
  // without replacement.
  Rng rng(seed);
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(order[i], order[j]);
  }
  order.resize(take);

  BatchSelection out;
  out.indices.reserve(take);
  out.ids.reserve(take);
  out.deltas.assign(take, 0.0);
  for (std::size_t idx : order) {
    out.indices.push_back(idx);
    out.ids.push_back(dataset[idx].id);
  }
  return out;
}

std::vector<std::string> filter_dataset(std::span<const RolloutRecord> rollouts,
                                        const FilterThresholds& thresholds) {
  thresholds.validate();
  std::unordered_set<std::string> seen;
  seen.reserve(rollouts.size());
  std::vector<std::string> retained;
  for (const auto& rec : rollouts) {
    rec.validate();
    if (!seen.insert(rec.problem_id).second) {
      throw std::invalid_argument("duplicate problem id \"" + rec.problem_id +
                                  "\" in rollout records");
    }
    const double rate = rec.solve_rate();
    // Strict interior: a rate at exactly low or high drops out.
    if (rate > thresholds.low && rate < thresholds.high) {
      retained.push_back(rec.problem_id);
    }
  }
  return retained;
}

double fixed_curriculum_target(const FixedCurriculumConfig& cfg, long step) {
  cfg.validate();
  if (step < 0 || step > cfg.total_steps) {
    throw std::invalid_argument("schedule step " + std::to_string(step) +
                                " outside [0, " + std::to_string(cfg.total_steps) + "]");
  }
  // Interpolated form keeps both endpoints exact.
  const double u = static_cast<double>(step) / static_cast<double>(cfg.total_steps);
  return cfg.t_min * (1.0 - u) + cfg.t_max * u;
}

}  // namespace adarft
