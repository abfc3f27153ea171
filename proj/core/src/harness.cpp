#include "adarft/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "adarft/io.hpp"
#include "adarft/log.hpp"
#include "adarft/rng.hpp"

namespace adarft {

namespace {

// Purpose salts for the per-run seed streams.
constexpr std::uint64_t kDatasetSalt = 0x64617461u;   // dataset generation
constexpr std::uint64_t kFilterSalt = 0x70617373u;    // pass@k pre-filter rollouts
constexpr std::uint64_t kSelectSalt = 0x73656c63u;    // per-step batch selection
constexpr std::uint64_t kOutcomeSalt = 0x6f757463u;   // per-step reward draws

constexpr long kSteadyWindow = 50;

bool uses_proximity(SamplerKind kind) {
  return kind == SamplerKind::AdaRFT || kind == SamplerKind::FixedCurriculum;
}

// Runs fn(0..n-1) across a small thread pool; rethrows the first failure.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(n, hw);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

Aggregate aggregate_sorted(std::vector<double> values) {
  // Sorting first makes the reduction invariant to input order, bit for bit.
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  Aggregate agg;
  double sum = 0.0;
  for (const double v : values) sum += v;
  agg.mean = sum / static_cast<double>(n);
  agg.median = (n % 2 == 1) ? values[n / 2]
                            : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  if (n > 1) {
    double ss = 0.0;
    for (const double v : values) ss += (v - agg.mean) * (v - agg.mean);
    agg.stddev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return agg;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (derive_scale_from_data) {
    // The scale (and the t_init check against it) resolves once the dataset
    // is loaded; validate the scale-independent scheduler fields meanwhile.
    SchedulerConfig probe = scheduler;
    probe.scale = DifficultyScale{};
    probe.t_init = probe.scale.min;
    probe.validate();
    if (!std::isfinite(scheduler.t_init)) {
      throw std::invalid_argument("scheduler t_init must be finite");
    }
  } else {
    scheduler.validate();
  }
  learner.validate();
  filter.validate();
  if (!derive_fixed_curriculum) fixed_curriculum.validate();
  if (exclusion_window < 0) {
    throw std::invalid_argument("exclusion_window must be >= 0");
  }
  if (total_steps < 1) throw std::invalid_argument("total_steps must be >= 1");
  if (eval_every < 1) throw std::invalid_argument("eval_every must be >= 1");
  if (!(smoothing > 0.0 && smoothing <= 1.0)) {
    throw std::invalid_argument("smoothing must lie in (0, 1]");
  }
  if (dataset.kind == DatasetSource::Kind::File && dataset.path.empty()) {
    throw std::invalid_argument("dataset path must be non-empty");
  }
}

RunResult run_training(const ExperimentConfig& input) {
  ExperimentConfig cfg = input;

  // Materialize the dataset and pin the resolved generation seed.
  std::vector<ProblemRecord> data;
  if (cfg.dataset.kind == DatasetSource::Kind::File) {
    data = read_dataset(cfg.dataset.path);
  } else {
    if (cfg.dataset.derive_generation_seed) {
      cfg.dataset.spec.seed = derive_seed(cfg.seed, kDatasetSalt);
      cfg.dataset.derive_generation_seed = false;
    }
    if (cfg.dataset.spec.size == 0) {
      cfg.dataset.spec.size = default_dataset_size(cfg.dataset.spec.kind);
    }
    data = generate(cfg.dataset.spec);
  }
  if (data.empty()) throw std::invalid_argument("dataset is empty");
  validate_dataset(data);

  if (cfg.derive_scale_from_data) {
    cfg.scheduler.scale = DifficultyScale::from_dataset(data);
    cfg.derive_scale_from_data = false;
    if (!cfg.scheduler.scale.contains(cfg.scheduler.t_init)) {
      const double snapped = cfg.scheduler.scale.clamp(cfg.scheduler.t_init);
      log_info("t_init " + std::to_string(cfg.scheduler.t_init) +
               " outside the derived scale; snapping to " + std::to_string(snapped));
      cfg.scheduler.t_init = snapped;
    }
  }
  if (cfg.derive_fixed_curriculum) {
    cfg.fixed_curriculum =
        FixedCurriculumConfig{cfg.scheduler.scale.min, cfg.scheduler.scale.max,
                              cfg.total_steps};
    cfg.derive_fixed_curriculum = false;
  }
  cfg.validate();

  // The Filtered sampler draws pass@k rollouts for every problem with the
  // initial learner, then keeps the strict interior of the solve-rate window.
  // The pool is fixed for the whole run, mirroring a pre-training filter pass.
  std::vector<ProblemRecord> filtered_pool;
  if (cfg.sampler == SamplerKind::Filtered) {
    Rng frng(derive_seed(cfg.seed, kFilterSalt));
    std::vector<RolloutRecord> rollouts;
    rollouts.reserve(data.size());
    for (const auto& rec : data) {
      const double p = success_prob(cfg.learner, rec.difficulty);
      int successes = 0;
      for (int a = 0; a < cfg.filter.attempts; ++a) {
        if (frng.bernoulli(p)) ++successes;
      }
      rollouts.push_back(RolloutRecord{rec.id, cfg.filter.attempts, successes});
    }
    const std::vector<std::string> retained = filter_dataset(rollouts, cfg.filter);
    if (retained.empty()) {
      throw std::runtime_error("pass@k filter removed every problem");
    }
    std::unordered_set<std::string_view> keep(retained.begin(), retained.end());
    filtered_pool.reserve(retained.size());
    for (const auto& rec : data) {
      if (keep.count(rec.id) != 0) filtered_pool.push_back(rec);
    }
    log_info("pass@k filter retained " + std::to_string(filtered_pool.size()) + " of " +
             std::to_string(data.size()) + " problems");
  }

  const std::span<const ProblemRecord> base =
      cfg.sampler == SamplerKind::Filtered ? std::span<const ProblemRecord>(filtered_pool)
                                           : std::span<const ProblemRecord>(data);

  LearnerState learner = cfg.learner;
  CurriculumState state = CurriculumState::initial(cfg.scheduler);
  std::deque<std::vector<std::string>> recent_batches;  // exclusion window

  RunResult result;
  result.metrics.reserve(static_cast<std::size_t>(cfg.total_steps));

  std::vector<ProblemRecord> scratch_pool;  // only used when exclusion kicks in
  std::vector<double> batch_difficulties;

  for (long t = 1; t <= cfg.total_steps; ++t) {
    try {
      std::span<const ProblemRecord> pool = base;
      if (cfg.exclusion_window > 0 && uses_proximity(cfg.sampler) &&
          !recent_batches.empty()) {
        std::unordered_set<std::string_view> excluded;
        for (const auto& ids : recent_batches) {
          excluded.insert(ids.begin(), ids.end());
        }
        scratch_pool.clear();
        for (const auto& rec : base) {
          if (excluded.count(rec.id) == 0) scratch_pool.push_back(rec);
        }
        if (scratch_pool.empty()) {
          log_warn("exclusion window covers the whole pool at step " + std::to_string(t) +
                   "; falling back to the full pool");
        } else {
          pool = scratch_pool;
        }
      }

      double target_before = cfg.scheduler.t_init;
      if (cfg.sampler == SamplerKind::AdaRFT) {
        target_before = state.target;
      } else if (cfg.sampler == SamplerKind::FixedCurriculum) {
        target_before = fixed_curriculum_target(
            cfg.fixed_curriculum, std::min(t - 1, cfg.fixed_curriculum.total_steps));
      }

      const std::uint64_t select_seed = derive_seed(cfg.seed, kSelectSalt,
                                                    static_cast<std::uint64_t>(t));
      const BatchSelection selection =
          uses_proximity(cfg.sampler)
              ? select_batch(pool, target_before, cfg.scheduler.batch_size, select_seed)
              : static_sample(pool, cfg.scheduler.batch_size, select_seed);

      batch_difficulties.clear();
      double cost = 0.0;
      for (const std::size_t idx : selection.indices) {
        const double d = pool[idx].difficulty;
        batch_difficulties.push_back(d);
        cost += d;
      }

      const BatchOutcomes outcomes = batch_outcomes(
          learner, batch_difficulties, cfg.outcome_mode,
          derive_seed(cfg.seed, kOutcomeSalt, static_cast<std::uint64_t>(t)));

      learner = learner_update(learner, batch_difficulties);

      double target_after = target_before;
      if (cfg.sampler == SamplerKind::AdaRFT) {
        state = update_target(state, outcomes.r_avg, cfg.scheduler);
        target_after = state.target;
      } else if (cfg.sampler == SamplerKind::FixedCurriculum) {
        target_after = fixed_curriculum_target(
            cfg.fixed_curriculum, std::min(t, cfg.fixed_curriculum.total_steps));
      }

      StepMetrics m;
      m.step = t;
      m.target_before = target_before;
      m.target_after = target_after;
      m.r_avg = outcomes.r_avg;
      m.batch_mean_difficulty = cost / static_cast<double>(batch_difficulties.size());
      m.learner_skill = learner.skill;
      m.batch_cost = cost;
      result.metrics.push_back(m);

      if (cfg.exclusion_window > 0 && uses_proximity(cfg.sampler)) {
        recent_batches.push_back(selection.ids);
        while (recent_batches.size() > static_cast<std::size_t>(cfg.exclusion_window)) {
          recent_batches.pop_front();
        }
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("step " + std::to_string(t) + ": " + e.what());
    }
  }

  std::vector<double> skills;
  skills.reserve(result.metrics.size());
  for (const auto& m : result.metrics) skills.push_back(m.learner_skill);
  result.smoothed_skill = smooth_series(skills, cfg.smoothing);

  const std::size_t n = result.metrics.size();
  const std::size_t window = std::min<std::size_t>(kSteadyWindow, n);
  double r_sum = 0.0, d_sum = 0.0, cost_sum = 0.0;
  for (const auto& m : result.metrics) cost_sum += m.batch_cost;
  for (std::size_t i = n - window; i < n; ++i) {
    r_sum += result.metrics[i].r_avg;
    d_sum += result.metrics[i].batch_mean_difficulty;
  }
  result.summary.final_skill = result.metrics.back().learner_skill;
  result.summary.final_smoothed_skill = result.smoothed_skill.back();
  result.summary.steady_r_avg = r_sum / static_cast<double>(window);
  result.summary.steady_batch_difficulty = d_sum / static_cast<double>(window);
  result.summary.total_batch_cost = cost_sum;

  result.config = cfg;
  return result;
}

std::vector<double> smooth_series(std::span<const double> xs, double smoothing) {
  if (xs.empty()) throw std::invalid_argument("empty series");
  if (!(smoothing > 0.0 && smoothing <= 1.0)) {
    throw std::invalid_argument("smoothing must lie in (0, 1]");
  }
  std::vector<double> out;
  out.reserve(xs.size());
  out.push_back(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    out.push_back(smoothing * xs[i] + (1.0 - smoothing) * out.back());
  }
  return out;
}

std::optional<long> extra_steps_to_match(const RunResult& reference,
                                         const RunResult& candidate,
                                         long at_step, double smoothing) {
  const long ref_steps = static_cast<long>(reference.metrics.size());
  const long cand_steps = static_cast<long>(candidate.metrics.size());
  if (at_step < 1 || at_step > ref_steps) {
    throw std::invalid_argument("at_step outside the reference horizon");
  }
  if (at_step > cand_steps) {
    throw std::invalid_argument("at_step outside the candidate horizon");
  }
  const long cadence = reference.config.eval_every;
  if (candidate.config.eval_every != cadence) {
    throw std::invalid_argument("runs have different eval cadences");
  }

  std::vector<double> ref_skill, cand_skill;
  ref_skill.reserve(reference.metrics.size());
  cand_skill.reserve(candidate.metrics.size());
  for (const auto& m : reference.metrics) ref_skill.push_back(m.learner_skill);
  for (const auto& m : candidate.metrics) cand_skill.push_back(m.learner_skill);

  const std::vector<double> ref_smooth = smooth_series(ref_skill, smoothing);
  const std::vector<double> cand_smooth = smooth_series(cand_skill, smoothing);

  const double level = ref_smooth[static_cast<std::size_t>(at_step - 1)];
  for (long t = cadence; t <= cand_steps; t += cadence) {
    if (cand_smooth[static_cast<std::size_t>(t - 1)] >= level) {
      return t - at_step;
    }
  }
  return std::nullopt;
}

std::vector<RunResult> run_many(std::span<const ExperimentConfig> configs) {
  std::vector<RunResult> results(configs.size());
  parallel_for_index(configs.size(),
                     [&](std::size_t i) { results[i] = run_training(configs[i]); });
  return results;
}

SweepStats seed_sweep(const ExperimentConfig& cfg, std::span<const std::uint64_t> seeds) {
  if (seeds.empty()) throw std::invalid_argument("seed sweep needs at least one seed");
  std::vector<ExperimentConfig> configs(seeds.size(), cfg);
  for (std::size_t i = 0; i < seeds.size(); ++i) configs[i].seed = seeds[i];
  const std::vector<RunResult> runs = run_many(configs);

  std::vector<double> final_skill, final_smoothed, steady_r, cost;
  for (const auto& run : runs) {
    final_skill.push_back(run.summary.final_skill);
    final_smoothed.push_back(run.summary.final_smoothed_skill);
    steady_r.push_back(run.summary.steady_r_avg);
    cost.push_back(run.summary.total_batch_cost);
  }

  SweepStats stats;
  stats.runs = runs.size();
  stats.final_skill = aggregate_sorted(std::move(final_skill));
  stats.final_smoothed_skill = aggregate_sorted(std::move(final_smoothed));
  stats.steady_r_avg = aggregate_sorted(std::move(steady_r));
  stats.total_batch_cost = aggregate_sorted(std::move(cost));
  return stats;
}

std::vector<BetaSummary> beta_ablation(const ExperimentConfig& base,
                                       std::span<const double> betas,
                                       std::span<const std::uint64_t> seeds) {
  if (betas.empty()) throw std::invalid_argument("beta ablation needs at least one beta");
  for (const double b : betas) {
    if (!(b > 0.0 && b < 1.0)) {
      throw std::invalid_argument("ablation beta must lie in (0, 1)");
    }
  }
  std::vector<BetaSummary> out;
  out.reserve(betas.size());
  for (const double b : betas) {
    ExperimentConfig cfg = base;
    cfg.scheduler.beta = b;
    const SweepStats stats = seed_sweep(cfg, seeds);
    out.push_back(BetaSummary{b, stats.final_skill.mean, stats.steady_r_avg.mean});
  }
  return out;
}

}  // namespace adarft
