#include "adarft/curriculum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "adarft/log.hpp"
#include "adarft/rng.hpp"

namespace adarft {

void SchedulerConfig::validate() const {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("scheduler eta must be a positive finite number");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("scheduler alpha must be a positive finite number");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("scheduler beta must lie in (0, 1)");
  }
  scale.validate();
  if (!scale.contains(t_init)) {
    throw std::invalid_argument("scheduler t_init must lie within the difficulty scale");
  }
  if (batch_size < 1) {
    throw std::invalid_argument("scheduler batch_size must be >= 1");
  }
}

CurriculumState CurriculumState::initial(const SchedulerConfig& cfg) {
  return CurriculumState{cfg.t_init, 0};
}

BatchSelection select_batch(std::span<const ProblemRecord> dataset, double target,
                            int batch_size, std::uint64_t tie_seed) {
  if (dataset.empty()) throw std::invalid_argument("empty dataset");
  if (!std::isfinite(target)) throw std::invalid_argument("target difficulty must be finite");
  if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");

  const std::size_t n = dataset.size();
  std::size_t take = static_cast<std::size_t>(batch_size);
  if (take > n) {
    log_warn("batch size " + std::to_string(take) + " exceeds dataset size " +
             std::to_string(n) + "; clamping to the dataset");
    take = n;
  }

  std::vector<double> delta(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(dataset[i].difficulty)) {
      throw std::invalid_argument("non-finite difficulty for problem \"" + dataset[i].id +
                                  "\"");
    }
    delta[i] = std::fabs(dataset[i].difficulty - target);
  }

  // Shuffle keys break ties among exact duplicates only; everything else is
  // ordered by (distance, difficulty).
  Rng rng(tie_seed);
  std::vector<std::uint64_t> key(n);
  for (auto& k : key) k = rng.next_u64();

  const auto closer = [&](std::size_t a, std::size_t b) {
    if (delta[a] != delta[b]) return delta[a] < delta[b];
    if (dataset[a].difficulty != dataset[b].difficulty) {
      return dataset[a].difficulty < dataset[b].difficulty;
    }
    if (key[a] != key[b]) return key[a] < key[b];
    return a < b;
  };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (take < n) {
    std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take),
                     order.end(), closer);
    order.resize(take);
  }
  std::sort(order.begin(), order.end(), closer);

  BatchSelection out;
  out.indices.reserve(take);
  out.ids.reserve(take);
  out.deltas.reserve(take);
  for (std::size_t idx : order) {
    out.indices.push_back(idx);
    out.ids.push_back(dataset[idx].id);
    out.deltas.push_back(delta[idx]);
  }
  return out;
}

CurriculumState update_target(const CurriculumState& state, double r_avg,
                              const SchedulerConfig& cfg) {
  cfg.validate();
  if (!(r_avg >= 0.0 && r_avg <= 1.0)) {
    throw std::invalid_argument("reward out of range");
  }
  if (!cfg.scale.contains(state.target)) {
    throw std::invalid_argument("curriculum target outside the difficulty scale");
  }
  const double stepped = state.target + cfg.eta * std::tanh(cfg.alpha * (r_avg - cfg.beta));
  CurriculumState next;
  next.target = cfg.scale.clamp(stepped);
  next.step = state.step + 1;
  return next;
}

double linearized_delta(double r_avg, const SchedulerConfig& cfg) {
  cfg.validate();
  if (!(r_avg >= 0.0 && r_avg <= 1.0)) {
    throw std::invalid_argument("reward out of range");
  }
  return cfg.eta * cfg.alpha * (r_avg - cfg.beta);
}

}  // namespace adarft
