// File formats and persistence: JSON Lines for record files (datasets,
// rollouts, judge scores), CSV for step metrics and confidence curves, and
// the JSON experiment config. Parse errors carry the origin and line number;
// config errors carry the offending field path.
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "adarft/difficulty.hpp"
#include "adarft/harness.hpp"
#include "adarft/types.hpp"

namespace adarft {

// 17-significant-digit textual form; parses back to the identical double.
std::string format_double(double v);

// Dataset files: one {"id", "difficulty", "tags"?} object per line.
// Parsing rejects duplicate ids and non-finite difficulties.
std::vector<ProblemRecord> parse_dataset(std::istream& in, const std::string& origin);
std::vector<ProblemRecord> read_dataset(const std::string& path);
void write_dataset(const std::string& path, std::span<const ProblemRecord> records);

// Rollout files: one {"problem_id", "attempts", "successes"} object per line.
std::vector<RolloutRecord> parse_rollouts(std::istream& in, const std::string& origin);
std::vector<RolloutRecord> read_rollouts(const std::string& path);
void write_rollouts(const std::string& path, std::span<const RolloutRecord> records);

// Judge-score files: one {"problem_id", "level"} object per line.
std::vector<JudgeScore> parse_judge_scores(std::istream& in, const std::string& origin);
std::vector<JudgeScore> read_judge_scores(const std::string& path);
void write_judge_scores(const std::string& path, std::span<const JudgeScore> scores);

// Step-metrics CSV. The header is bit-exact and checked on read.
extern const char* const kMetricsCsvHeader;
void write_metrics_csv(const std::string& path, std::span<const StepMetrics> metrics);
std::vector<StepMetrics> read_metrics_csv(const std::string& path);

// Confidence-curve CSV: sample_size,confidence.
void write_confidence_csv(const std::string& path, const ConfidenceCurve& curve);

// Experiment config as a JSON document. Validation is exhaustive: unknown
// keys, wrong types, and out-of-range values all fail with the field path
// (e.g. "scheduler.eta").
ExperimentConfig parse_experiment_config(const std::string& json_text,
                                         const std::string& origin);
ExperimentConfig load_experiment_config(const std::string& path);

// Resolved-config and run-summary JSON (deterministic key order).
std::string experiment_config_to_json(const ExperimentConfig& cfg);
std::string run_summary_to_json(const RunResult& result);

}  // namespace adarft
