// adarft: command-line front end for dataset generation, difficulty
// estimation, curriculum training runs, and sampler comparisons.
//
// Subcommands: gen-dataset, estimate, confidence, correlate, rescale-judge,
// filter, train, compare, ablate-beta. All flags are long-form; ADARFT_LOG
// (error|warn|info|debug) controls log verbosity.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "adarft/datagen.hpp"
#include "adarft/difficulty.hpp"
#include "adarft/harness.hpp"
#include "adarft/io.hpp"
#include "adarft/log.hpp"
#include "adarft/samplers.hpp"

namespace fs = std::filesystem;
using namespace adarft;

namespace {

void ensure_parent_dir(const std::string& path) {
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty()) fs::create_directories(parent);
}

void ensure_dir(const std::string& path) { fs::create_directories(path); }

void write_text(const std::string& path, const std::string& content) {
  ensure_parent_dir(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write to \"" + path + "\" failed");
}

// ---------------------------------------------------------------------------
// gen-dataset
// ---------------------------------------------------------------------------

struct GenDatasetArgs {
  std::string kind;
  long long size = 0;  // resolved to the kind default when the flag is absent
  bool size_given = false;
  double scale_min = 0.0;
  double scale_max = 100.0;
  std::uint64_t seed = 0;
  double beta_a = 2.0;
  double beta_b = 5.0;
  std::string out;
};

int run_gen_dataset(const GenDatasetArgs& args) {
  DistributionSpec spec;
  spec.kind = distribution_kind_from_string(args.kind);
  spec.size = args.size_given ? static_cast<std::size_t>(args.size)
                              : default_dataset_size(spec.kind);
  spec.scale = DifficultyScale{args.scale_min, args.scale_max};
  spec.seed = args.seed;
  spec.skew_a = args.beta_a;
  spec.skew_b = args.beta_b;

  const auto records = generate(spec);
  ensure_parent_dir(args.out);
  write_dataset(args.out, records);
  std::cout << "wrote " << records.size() << " problems (" << to_string(spec.kind)
            << ") to " << args.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// estimate
// ---------------------------------------------------------------------------

struct EstimateArgs {
  std::string rollouts;
  long long attempts_override = 0;
  bool override_given = false;
  std::string out;
};

int run_estimate(const EstimateArgs& args) {
  auto rollouts = read_rollouts(args.rollouts);
  if (args.override_given) {
    for (auto& rec : rollouts) {
      if (rec.successes > args.attempts_override) {
        throw std::invalid_argument("problem \"" + rec.problem_id + "\": successes " +
                                    std::to_string(rec.successes) +
                                    " exceed the attempts override " +
                                    std::to_string(args.attempts_override));
      }
      rec.attempts = static_cast<int>(args.attempts_override);
    }
  }
  std::vector<ProblemRecord> scored;
  scored.reserve(rollouts.size());
  for (const auto& rec : rollouts) {
    scored.push_back(ProblemRecord{rec.problem_id, pass_n_difficulty(rec), {}});
  }
  if (scored.empty()) {
    log_warn("no rollout records in " + args.rollouts + "; writing an empty dataset");
  }
  ensure_parent_dir(args.out);
  write_dataset(args.out, scored);
  std::cout << "wrote " << scored.size() << " scored problems to " << args.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// confidence
// ---------------------------------------------------------------------------

struct ConfidenceArgs {
  std::string rollouts;
  std::vector<int> sizes = {8, 16, 32, 40, 64, 96, 128};
  double tolerance = 0.05;
  int trials = 10;
  std::uint64_t seed = 0;
  std::string out;
};

int run_confidence(const ConfidenceArgs& args) {
  const auto rollouts = read_rollouts(args.rollouts);
  if (rollouts.empty()) {
    throw std::invalid_argument("no rollout records in " + args.rollouts);
  }

  // Per-problem curves first, then the mean across problems per sample size.
  std::vector<double> sums(args.sizes.size(), 0.0);
  for (std::size_t i = 0; i < rollouts.size(); ++i) {
    const auto& rec = rollouts[i];
    try {
      const auto curve = subsample_confidence(rec, args.sizes, args.tolerance, args.trials,
                                              derive_seed(args.seed, 0x636f6e66u, i));
      for (std::size_t k = 0; k < sums.size(); ++k) sums[k] += curve.confidence[k];
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("problem \"" + rec.problem_id + "\": " + e.what());
    }
  }

  ConfidenceCurve mean_curve;
  mean_curve.sample_sizes = args.sizes;
  mean_curve.tolerance = args.tolerance;
  mean_curve.trials = args.trials;
  for (const double s : sums) {
    mean_curve.confidence.push_back(s / static_cast<double>(rollouts.size()));
  }
  ensure_parent_dir(args.out);
  write_confidence_csv(args.out, mean_curve);
  std::cout << "wrote confidence curve (" << args.sizes.size() << " sizes, "
            << rollouts.size() << " problems) to " << args.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// correlate
// ---------------------------------------------------------------------------

struct CorrelateArgs {
  std::string rollouts;
  std::string scores;
  std::string out;
};

int run_correlate(const CorrelateArgs& args) {
  const auto rollouts = read_rollouts(args.rollouts);
  const auto scores = read_judge_scores(args.scores);

  std::unordered_map<std::string, double> level_by_id;
  for (const auto& score : scores) {
    if (!level_by_id.emplace(score.problem_id, score.level).second) {
      throw std::invalid_argument("duplicate problem id \"" + score.problem_id +
                                  "\" in judge scores");
    }
  }
  std::set<std::string> seen;
  std::vector<double> rates, levels;
  for (const auto& rec : rollouts) {
    if (!seen.insert(rec.problem_id).second) {
      throw std::invalid_argument("duplicate problem id \"" + rec.problem_id +
                                  "\" in rollout records");
    }
    const auto it = level_by_id.find(rec.problem_id);
    if (it == level_by_id.end()) continue;
    rates.push_back(rec.solve_rate());
    levels.push_back(it->second);
  }
  if (rates.size() < 2) {
    throw std::invalid_argument("need at least two problems present in both files; matched " +
                                std::to_string(rates.size()));
  }
  const double r = pearson_correlation(levels, rates);
  std::cout << "pearson_r=" << format_double(r) << " over " << rates.size()
            << " matched problems\n";
  if (!args.out.empty()) {
    write_text(args.out, "{\n  \"pearson_r\": " + format_double(r) +
                             ",\n  \"matched\": " + std::to_string(rates.size()) + "\n}\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// rescale-judge
// ---------------------------------------------------------------------------

struct RescaleArgs {
  std::string scores;
  double scale_min = 0.0;
  double scale_max = 100.0;
  std::string out;
};

int run_rescale(const RescaleArgs& args) {
  const auto scores = read_judge_scores(args.scores);
  const auto records =
      rescale_judge_scores(scores, DifficultyScale{args.scale_min, args.scale_max});
  ensure_parent_dir(args.out);
  write_dataset(args.out, records);
  std::cout << "wrote " << records.size() << " rescaled problems to " << args.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// filter
// ---------------------------------------------------------------------------

struct FilterArgs {
  std::string rollouts;
  double low = 0.10;
  double high = 0.90;
  std::string dataset;
  std::string out;
};

int run_filter(const FilterArgs& args) {
  const auto rollouts = read_rollouts(args.rollouts);
  FilterThresholds thresholds;
  thresholds.low = args.low;
  thresholds.high = args.high;
  const auto retained = filter_dataset(rollouts, thresholds);

  ensure_parent_dir(args.out);
  if (args.dataset.empty()) {
    // Plain id list, one per line.
    std::string text;
    for (const auto& id : retained) {
      text += id;
      text += '\n';
    }
    write_text(args.out, text);
  } else {
    const auto data = read_dataset(args.dataset);
    const std::set<std::string> keep(retained.begin(), retained.end());
    std::vector<ProblemRecord> kept;
    for (const auto& rec : data) {
      if (keep.count(rec.id) != 0) kept.push_back(rec);
    }
    write_dataset(args.out, kept);
  }
  std::cout << "retained " << retained.size() << " of " << rollouts.size()
            << " problems -> " << args.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// train
// ---------------------------------------------------------------------------

struct TrainArgs {
  std::string config;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
};

int run_train(const TrainArgs& args) {
  ExperimentConfig cfg = load_experiment_config(args.config);
  if (args.seed_given) cfg.seed = args.seed;

  const RunResult result = run_training(cfg);
  ensure_dir(args.out);
  write_metrics_csv((fs::path(args.out) / "metrics.csv").string(), result.metrics);
  write_text((fs::path(args.out) / "summary.json").string(), run_summary_to_json(result));
  write_text((fs::path(args.out) / "config_resolved.json").string(),
             experiment_config_to_json(result.config));
  std::cout << "ran " << to_string(result.config.sampler) << " for "
            << result.config.total_steps << " steps: final skill "
            << format_double(result.summary.final_skill) << ", steady r_avg "
            << format_double(result.summary.steady_r_avg) << " -> " << args.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

struct CompareArgs {
  std::string config;
  std::vector<std::string> methods;
  std::vector<std::uint64_t> seeds;
  long at_step = 60;
  double smoothing = 0.0;
  bool smoothing_given = false;
  std::string out;
};

struct ExtraAggregate {
  std::string mean;
  std::string median;
  std::string stddev;
};

std::string extra_to_string(const std::optional<long>& extra) {
  return extra ? std::to_string(*extra) : std::string("never");
}

ExtraAggregate aggregate_extra_steps(std::vector<std::optional<long>> values) {
  // "never" sorts above every finite count.
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    if (a.has_value() != b.has_value()) return a.has_value();
    return a.has_value() ? *a < *b : false;
  });
  const std::size_t n = values.size();
  const bool any_never =
      std::any_of(values.begin(), values.end(), [](const auto& v) { return !v; });

  ExtraAggregate agg;
  if (n % 2 == 1) {
    agg.median = extra_to_string(values[n / 2]);
  } else {
    const auto& lo = values[n / 2 - 1];
    const auto& hi = values[n / 2];
    agg.median = (lo && hi) ? format_double(0.5 * static_cast<double>(*lo + *hi))
                            : std::string("never");
  }
  if (any_never) {
    agg.mean = "never";
    agg.stddev = "never";
  } else {
    double sum = 0.0;
    for (const auto& v : values) sum += static_cast<double>(*v);
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const auto& v : values) {
      ss += (static_cast<double>(*v) - mean) * (static_cast<double>(*v) - mean);
    }
    agg.mean = format_double(mean);
    agg.stddev = format_double(n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0);
  }
  return agg;
}

int run_compare(const CompareArgs& args) {
  std::vector<std::string> methods;
  for (const auto& name : args.methods) {
    if (std::find(methods.begin(), methods.end(), name) == methods.end()) {
      methods.push_back(name);
    } else {
      log_warn("dropping duplicate method \"" + name + "\"");
    }
  }
  if (methods.size() < 2) {
    throw std::invalid_argument("compare needs at least two distinct methods");
  }
  if (std::find(methods.begin(), methods.end(), "adarft") == methods.end()) {
    throw std::invalid_argument("compare needs \"adarft\" among the methods (it is the reference)");
  }
  if (args.seeds.empty()) throw std::invalid_argument("compare needs at least one seed");
  if (args.at_step < 1) throw std::invalid_argument("at-step must be >= 1");

  const ExperimentConfig base = load_experiment_config(args.config);
  const double smoothing = args.smoothing_given ? args.smoothing : base.smoothing;
  if (!(smoothing > 0.0 && smoothing <= 1.0)) {
    throw std::invalid_argument("smoothing must lie in (0, 1]");
  }

  std::vector<SamplerKind> kinds;
  for (const auto& name : methods) kinds.push_back(sampler_kind_from_string(name));

  // One run per (method, seed), same seed across methods for paired
  // comparisons; the sweep runs concurrently.
  std::vector<ExperimentConfig> configs;
  configs.reserve(methods.size() * args.seeds.size());
  for (const auto kind : kinds) {
    for (const auto seed : args.seeds) {
      ExperimentConfig cfg = base;
      cfg.sampler = kind;
      cfg.seed = seed;
      configs.push_back(cfg);
    }
  }
  const std::vector<RunResult> runs = run_many(configs);
  const auto run_at = [&](std::size_t method_idx, std::size_t seed_idx) -> const RunResult& {
    return runs[method_idx * args.seeds.size() + seed_idx];
  };

  const auto adarft_idx = static_cast<std::size_t>(
      std::find(kinds.begin(), kinds.end(), SamplerKind::AdaRFT) - kinds.begin());

  std::string raw_csv = "method,seed,final_skill,steady_r_avg,extra_steps\n";
  std::string agg_csv = "method,aggregate,final_skill,steady_r_avg,extra_steps\n";
  std::vector<std::string> summary_lines;

  for (std::size_t m = 0; m < methods.size(); ++m) {
    std::vector<double> final_skill, steady_r;
    std::vector<std::optional<long>> extras;
    for (std::size_t s = 0; s < args.seeds.size(); ++s) {
      const RunResult& run = run_at(m, s);
      final_skill.push_back(run.summary.final_skill);
      steady_r.push_back(run.summary.steady_r_avg);
      // The reference method matches itself at +0 by definition.
      const std::optional<long> extra =
          kinds[m] == SamplerKind::AdaRFT
              ? std::optional<long>(0)
              : extra_steps_to_match(run_at(adarft_idx, s), run, args.at_step, smoothing);
      extras.push_back(extra);
      raw_csv += methods[m] + "," + std::to_string(args.seeds[s]) + "," +
                 format_double(run.summary.final_skill) + "," +
                 format_double(run.summary.steady_r_avg) + "," + extra_to_string(extra) +
                 "\n";
    }

    auto sorted_skill = final_skill;
    std::sort(sorted_skill.begin(), sorted_skill.end());
    auto sorted_r = steady_r;
    std::sort(sorted_r.begin(), sorted_r.end());
    const auto mean_of = [](const std::vector<double>& xs) {
      double sum = 0.0;
      for (const double x : xs) sum += x;
      return sum / static_cast<double>(xs.size());
    };
    const auto median_of = [](const std::vector<double>& xs) {
      const std::size_t n = xs.size();
      return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
    };
    const auto stddev_of = [&](const std::vector<double>& xs) {
      if (xs.size() < 2) return 0.0;
      const double mean = mean_of(xs);
      double ss = 0.0;
      for (const double x : xs) ss += (x - mean) * (x - mean);
      return std::sqrt(ss / static_cast<double>(xs.size() - 1));
    };
    const ExtraAggregate extra_agg = aggregate_extra_steps(extras);

    agg_csv += methods[m] + ",mean," + format_double(mean_of(sorted_skill)) + "," +
               format_double(mean_of(sorted_r)) + "," + extra_agg.mean + "\n";
    agg_csv += methods[m] + ",median," + format_double(median_of(sorted_skill)) + "," +
               format_double(median_of(sorted_r)) + "," + extra_agg.median + "\n";
    agg_csv += methods[m] + ",stddev," + format_double(stddev_of(sorted_skill)) + "," +
               format_double(stddev_of(sorted_r)) + "," + extra_agg.stddev + "\n";

    summary_lines.push_back(methods[m] + ": median extra steps " + extra_agg.median +
                            ", mean final skill " + format_double(mean_of(sorted_skill)));
  }

  ensure_dir(args.out);
  write_text((fs::path(args.out) / "comparison.csv").string(), agg_csv);
  write_text((fs::path(args.out) / "comparison_runs.csv").string(), raw_csv);
  for (const auto& line : summary_lines) std::cout << line << "\n";
  std::cout << "wrote comparison tables to " << args.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// ablate-beta
// ---------------------------------------------------------------------------

struct AblateArgs {
  std::string config;
  std::vector<double> betas = {0.2, 0.5, 0.8};
  std::vector<std::uint64_t> seeds;
  std::string out;
};

int run_ablate(const AblateArgs& args) {
  if (args.seeds.empty()) throw std::invalid_argument("ablate-beta needs at least one seed");
  const ExperimentConfig base = load_experiment_config(args.config);
  const auto summaries = beta_ablation(base, args.betas, args.seeds);

  std::string csv = "beta,runs,mean_final_skill,mean_steady_r_avg\n";
  for (const auto& row : summaries) {
    csv += format_double(row.beta) + "," + std::to_string(args.seeds.size()) + "," +
           format_double(row.mean_final_skill) + "," +
           format_double(row.mean_steady_r_avg) + "\n";
    std::cout << "beta " << format_double(row.beta) << ": mean final skill "
              << format_double(row.mean_final_skill) << ", mean steady r_avg "
              << format_double(row.mean_steady_r_avg) << "\n";
  }
  ensure_dir(args.out);
  write_text((fs::path(args.out) / "beta_ablation.csv").string(), csv);
  std::cout << "wrote ablation table to " << args.out << "\n";
  return 0;
}

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& desc) {
  CLI::App* cmd = app.add_subcommand(name, desc);
  cmd->set_help_flag("--help", "Print this help message and exit");
  return cmd;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive-curriculum reinforcement finetuning toolkit"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  GenDatasetArgs gen;
  CLI::App* gen_cmd = add_command(app, "gen-dataset", "Generate a synthetic problem dataset");
  gen_cmd->add_option("--kind", gen.kind,
                      "uniform | skew-easy | skew-difficult | easy-extreme | hard-extreme")
      ->required();
  auto* size_opt = gen_cmd->add_option("--size", gen.size, "Problem count (default per kind)")
                       ->check(CLI::Range(1LL, std::numeric_limits<long long>::max()));
  gen_cmd->add_option("--scale-min", gen.scale_min, "Difficulty scale lower bound");
  gen_cmd->add_option("--scale-max", gen.scale_max, "Difficulty scale upper bound");
  gen_cmd->add_option("--seed", gen.seed, "Generation seed");
  gen_cmd->add_option("--beta-a", gen.beta_a, "Skew shape toward the easy end");
  gen_cmd->add_option("--beta-b", gen.beta_b, "Skew shape toward the hard end");
  gen_cmd->add_option("--out", gen.out, "Output dataset (JSON Lines)")->required();

  EstimateArgs est;
  CLI::App* est_cmd = add_command(app, "estimate", "Score problems from pass@n rollouts");
  est_cmd->add_option("--rollouts", est.rollouts, "Rollout records (JSON Lines)")
      ->required()
      ->check(CLI::ExistingFile);
  auto* attempts_opt =
      est_cmd->add_option("--attempts", est.attempts_override, "Override attempts for every record")
          ->check(CLI::Range(1LL, std::numeric_limits<long long>::max()));
  est_cmd->add_option("--out", est.out, "Output dataset (JSON Lines)")->required();

  ConfidenceArgs conf;
  CLI::App* conf_cmd =
      add_command(app, "confidence", "Subsampling stability of difficulty estimates");
  conf_cmd->add_option("--rollouts", conf.rollouts, "Rollout records (JSON Lines)")
      ->required()
      ->check(CLI::ExistingFile);
  conf_cmd->add_option("--sizes", conf.sizes, "Comma-separated subsample sizes")
      ->delimiter(',');
  conf_cmd->add_option("--tolerance", conf.tolerance, "Rate tolerance around the full estimate");
  conf_cmd->add_option("--trials", conf.trials, "Sampling trials per size")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()));
  conf_cmd->add_option("--seed", conf.seed, "Sampling seed");
  conf_cmd->add_option("--out", conf.out, "Output curve (CSV)")->required();

  CorrelateArgs corr;
  CLI::App* corr_cmd =
      add_command(app, "correlate", "Pearson correlation of judge levels vs solve rates");
  corr_cmd->add_option("--rollouts", corr.rollouts, "Rollout records (JSON Lines)")
      ->required()
      ->check(CLI::ExistingFile);
  corr_cmd->add_option("--scores", corr.scores, "Judge scores (JSON Lines)")
      ->required()
      ->check(CLI::ExistingFile);
  corr_cmd->add_option("--out", corr.out, "Optional JSON result path");

  RescaleArgs resc;
  CLI::App* resc_cmd =
      add_command(app, "rescale-judge", "Map 1-5 judge levels onto a difficulty scale");
  resc_cmd->add_option("--scores", resc.scores, "Judge scores (JSON Lines)")
      ->required()
      ->check(CLI::ExistingFile);
  resc_cmd->add_option("--scale-min", resc.scale_min, "Target scale lower bound");
  resc_cmd->add_option("--scale-max", resc.scale_max, "Target scale upper bound");
  resc_cmd->add_option("--out", resc.out, "Output dataset (JSON Lines)")->required();

  FilterArgs filt;
  CLI::App* filt_cmd =
      add_command(app, "filter", "Drop problems with solve rates at or outside [low, high]");
  filt_cmd->add_option("--rollouts", filt.rollouts, "Rollout records (JSON Lines)")
      ->required()
      ->check(CLI::ExistingFile);
  filt_cmd->add_option("--low", filt.low, "Lower solve-rate threshold");
  filt_cmd->add_option("--high", filt.high, "Upper solve-rate threshold");
  filt_cmd->add_option("--dataset", filt.dataset,
                       "Optional dataset to subset (default: write retained ids)")
      ->check(CLI::ExistingFile);
  filt_cmd->add_option("--out", filt.out, "Output path")->required();

  TrainArgs train;
  CLI::App* train_cmd = add_command(app, "train", "Run one training experiment");
  train_cmd->add_option("--config", train.config, "Experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  auto* seed_opt = train_cmd->add_option("--seed", train.seed, "Master seed override");
  train_cmd->add_option("--out", train.out, "Output directory")->required();

  CompareArgs cmp;
  CLI::App* cmp_cmd =
      add_command(app, "compare", "Run several samplers over seeds and tabulate extra steps");
  cmp_cmd->add_option("--config", cmp.config, "Experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmp_cmd->add_option("--methods", cmp.methods,
                      "Comma-separated sampler kinds (must include adarft)")
      ->required()
      ->delimiter(',');
  cmp_cmd->add_option("--seeds", cmp.seeds, "Comma-separated master seeds")
      ->required()
      ->delimiter(',');
  cmp_cmd->add_option("--at-step", cmp.at_step, "Reference step for extra-steps-to-match");
  auto* smooth_opt =
      cmp_cmd->add_option("--smoothing", cmp.smoothing,
                          "Smoothing for the matched curves (1 = raw; default from config)");
  cmp_cmd->add_option("--out", cmp.out, "Output directory")->required();

  AblateArgs abl;
  CLI::App* abl_cmd = add_command(app, "ablate-beta", "Sweep the target reward beta");
  abl_cmd->add_option("--config", abl.config, "Experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  abl_cmd->add_option("--betas", abl.betas, "Comma-separated beta values")->delimiter(',');
  abl_cmd->add_option("--seeds", abl.seeds, "Comma-separated master seeds")
      ->required()
      ->delimiter(',');
  abl_cmd->add_option("--out", abl.out, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  gen.size_given = size_opt->count() > 0;
  est.override_given = attempts_opt->count() > 0;
  train.seed_given = seed_opt->count() > 0;
  cmp.smoothing_given = smooth_opt->count() > 0;

  try {
    if (gen_cmd->parsed()) return run_gen_dataset(gen);
    if (est_cmd->parsed()) return run_estimate(est);
    if (conf_cmd->parsed()) return run_confidence(conf);
    if (corr_cmd->parsed()) return run_correlate(corr);
    if (resc_cmd->parsed()) return run_rescale(resc);
    if (filt_cmd->parsed()) return run_filter(filt);
    if (train_cmd->parsed()) return run_train(train);
    if (cmp_cmd->parsed()) return run_compare(cmp);
    if (abl_cmd->parsed()) return run_ablate(abl);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
