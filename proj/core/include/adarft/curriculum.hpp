// Adaptive curriculum controller: difficulty-proximity batch selection plus
// the tanh-clipped target update that steers batches toward a desired
// success rate.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adarft/types.hpp"

namespace adarft {

// Controller hyperparameters. The defaults assume the 0-100 difficulty scale
// and a reward in [0, 1]: eta spans half the scale so one saturated update can
// move the target across a meaningful fraction of it, and alpha keeps the tanh
// close to linear for small reward deviations.
struct SchedulerConfig {
  double eta = 50.0;    // step size, in difficulty units
  double alpha = 2.0;   // sensitivity of the tanh response
  double beta = 0.5;    // target success rate
  double t_init = 0.0;  // initial target difficulty
  DifficultyScale scale;
  int batch_size = 1024;

  void validate() const;
};

// Evolving controller state: current target difficulty and update count.
struct CurriculumState {
  double target = 0.0;
  long step = 0;

  static CurriculumState initial(const SchedulerConfig& cfg);
};

// Result of one batch selection. `indices` point into the dataset the
// selection ran over; `deltas` are the matching |d_i - T| distances in
// non-decreasing order. Baseline samplers reuse this shape with zero deltas.
struct BatchSelection {
  std::vector<std::size_t> indices;
  std::vector<std::string> ids;
  std::vector<double> deltas;

  std::size_t size() const { return indices.size(); }
};

// Picks the min(batch_size, |dataset|) problems minimizing |d_i - target|.
// Boundary ties prefer the lower difficulty; exact duplicates are ordered by
// a seeded shuffle, so the result is deterministic for a fixed tie_seed.
// A batch_size larger than the dataset is clamped with a warning.
BatchSelection select_batch(std::span<const ProblemRecord> dataset, double target,
                            int batch_size, std::uint64_t tie_seed);

// One controller step:
//   T' = clip(T + eta * tanh(alpha * (r_avg - beta)), scale.min, scale.max)
// Clipping is applied once, after the full tanh step. r_avg == beta leaves
// the target bit-identical.
CurriculumState update_target(const CurriculumState& state, double r_avg,
                              const SchedulerConfig& cfg);

// Small-deviation linearization of the update, eta * alpha * (r_avg - beta).
// The tanh update never strays from this line by more than
// (eta / 3) * |alpha * (r_avg - beta)|^3.
double linearized_delta(double r_avg, const SchedulerConfig& cfg);

}  // namespace adarft
