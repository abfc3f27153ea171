#include "adarft/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace adarft {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string json_quote(const std::string& s) { return json(s).dump(); }

bool is_blank(const std::string& line) {
  for (const char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::string line_ctx(const std::string& origin, std::size_t lineno) {
  return origin + ":" + std::to_string(lineno);
}

std::ifstream open_for_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\" for reading");
  return in;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  return out;
}

void finish_write(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("write to \"" + path + "\" failed");
}

json parse_json_line(const std::string& line, const std::string& ctx) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {  // parse errors and number overflow alike
    throw std::invalid_argument(ctx + ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument(ctx + ": expected a JSON object");
  return j;
}

const json& require_field(const json& obj, const char* key, const std::string& ctx) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw std::invalid_argument(ctx + ": missing field \"" + std::string(key) + "\"");
  }
  return *it;
}

std::string field_string(const json& obj, const char* key, const std::string& ctx) {
  const json& v = require_field(obj, key, ctx);
  if (!v.is_string()) {
    throw std::invalid_argument(ctx + ": field \"" + std::string(key) + "\" must be a string");
  }
  return v.get<std::string>();
}

double field_number(const json& obj, const char* key, const std::string& ctx) {
  const json& v = require_field(obj, key, ctx);
  if (!v.is_number()) {
    throw std::invalid_argument(ctx + ": field \"" + std::string(key) + "\" must be a number");
  }
  return v.get<double>();
}

int field_int(const json& obj, const char* key, const std::string& ctx) {
  const json& v = require_field(obj, key, ctx);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(ctx + ": field \"" + std::string(key) + "\" must be an integer");
  }
  return v.get<int>();
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Dataset files
// ---------------------------------------------------------------------------

std::vector<ProblemRecord> parse_dataset(std::istream& in, const std::string& origin) {
  std::vector<ProblemRecord> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const std::string ctx = line_ctx(origin, lineno);
    const json j = parse_json_line(line, ctx);

    ProblemRecord rec;
    rec.id = field_string(j, "id", ctx);
    if (rec.id.empty()) throw std::invalid_argument(ctx + ": empty problem id");
    rec.difficulty = field_number(j, "difficulty", ctx);
    if (!std::isfinite(rec.difficulty)) {
      throw std::invalid_argument(ctx + ": non-finite difficulty");
    }
    if (const auto it = j.find("tags"); it != j.end()) {
      if (!it->is_array()) throw std::invalid_argument(ctx + ": \"tags\" must be an array");
      for (const auto& tag : *it) {
        if (!tag.is_string()) {
          throw std::invalid_argument(ctx + ": \"tags\" entries must be strings");
        }
        rec.tags.push_back(tag.get<std::string>());
      }
    }
    if (!seen.insert(rec.id).second) {
      throw std::invalid_argument(ctx + ": duplicate problem id \"" + rec.id + "\"");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ProblemRecord> read_dataset(const std::string& path) {
  auto in = open_for_read(path);
  return parse_dataset(in, path);
}

void write_dataset(const std::string& path, std::span<const ProblemRecord> records) {
  validate_dataset(records);
  auto out = open_for_write(path);
  for (const auto& rec : records) {
    out << "{\"id\":" << json_quote(rec.id)
        << ",\"difficulty\":" << format_double(rec.difficulty);
    if (!rec.tags.empty()) {
      out << ",\"tags\":[";
      for (std::size_t i = 0; i < rec.tags.size(); ++i) {
        if (i > 0) out << ",";
        out << json_quote(rec.tags[i]);
      }
      out << "]";
    }
    out << "}\n";
  }
  finish_write(out, path);
}

// ---------------------------------------------------------------------------
// Rollout files
// ---------------------------------------------------------------------------

std::vector<RolloutRecord> parse_rollouts(std::istream& in, const std::string& origin) {
  std::vector<RolloutRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const std::string ctx = line_ctx(origin, lineno);
    const json j = parse_json_line(line, ctx);

    RolloutRecord rec;
    rec.problem_id = field_string(j, "problem_id", ctx);
    rec.attempts = field_int(j, "attempts", ctx);
    rec.successes = field_int(j, "successes", ctx);
    try {
      rec.validate();
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(ctx + ": " + e.what());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<RolloutRecord> read_rollouts(const std::string& path) {
  auto in = open_for_read(path);
  return parse_rollouts(in, path);
}

void write_rollouts(const std::string& path, std::span<const RolloutRecord> records) {
  auto out = open_for_write(path);
  for (const auto& rec : records) {
    rec.validate();
    out << "{\"problem_id\":" << json_quote(rec.problem_id)
        << ",\"attempts\":" << rec.attempts << ",\"successes\":" << rec.successes << "}\n";
  }
  finish_write(out, path);
}

// ---------------------------------------------------------------------------
// Judge-score files
// ---------------------------------------------------------------------------

std::vector<JudgeScore> parse_judge_scores(std::istream& in, const std::string& origin) {
  std::vector<JudgeScore> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    const std::string ctx = line_ctx(origin, lineno);
    const json j = parse_json_line(line, ctx);

    JudgeScore score;
    score.problem_id = field_string(j, "problem_id", ctx);
    score.level = field_number(j, "level", ctx);
    try {
      score.validate();
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(ctx + ": " + e.what());
    }
    out.push_back(std::move(score));
  }
  return out;
}

std::vector<JudgeScore> read_judge_scores(const std::string& path) {
  auto in = open_for_read(path);
  return parse_judge_scores(in, path);
}

void write_judge_scores(const std::string& path, std::span<const JudgeScore> scores) {
  auto out = open_for_write(path);
  for (const auto& score : scores) {
    score.validate();
    out << "{\"problem_id\":" << json_quote(score.problem_id)
        << ",\"level\":" << format_double(score.level) << "}\n";
  }
  finish_write(out, path);
}

// ---------------------------------------------------------------------------
// Metrics CSV
// ---------------------------------------------------------------------------

const char* const kMetricsCsvHeader =
    "step,target_before,target_after,r_avg,batch_mean_difficulty,learner_skill,batch_cost";

void write_metrics_csv(const std::string& path, std::span<const StepMetrics> metrics) {
  auto out = open_for_write(path);
  out << kMetricsCsvHeader << "\n";
  for (const auto& m : metrics) {
    out << m.step << ',' << format_double(m.target_before) << ','
        << format_double(m.target_after) << ',' << format_double(m.r_avg) << ','
        << format_double(m.batch_mean_difficulty) << ',' << format_double(m.learner_skill)
        << ',' << format_double(m.batch_cost) << "\n";
  }
  finish_write(out, path);
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (const char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_csv_double(const std::string& field, const std::string& ctx) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw std::invalid_argument(ctx + ": malformed number \"" + field + "\"");
  }
  return v;
}

long parse_csv_long(const std::string& field, const std::string& ctx) {
  long v = 0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw std::invalid_argument(ctx + ": malformed integer \"" + field + "\"");
  }
  return v;
}

}  // namespace

std::vector<StepMetrics> read_metrics_csv(const std::string& path) {
  auto in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument(path + ":1: missing header row");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kMetricsCsvHeader) {
    throw std::invalid_argument(path + ":1: unexpected header \"" + line + "\"");
  }
  std::vector<StepMetrics> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string ctx = line_ctx(path, lineno);
    const auto fields = split_csv_row(line);
    if (fields.size() != 7) {
      throw std::invalid_argument(ctx + ": expected 7 fields, got " +
                                  std::to_string(fields.size()));
    }
    StepMetrics m;
    m.step = parse_csv_long(fields[0], ctx);
    m.target_before = parse_csv_double(fields[1], ctx);
    m.target_after = parse_csv_double(fields[2], ctx);
    m.r_avg = parse_csv_double(fields[3], ctx);
    m.batch_mean_difficulty = parse_csv_double(fields[4], ctx);
    m.learner_skill = parse_csv_double(fields[5], ctx);
    m.batch_cost = parse_csv_double(fields[6], ctx);
    out.push_back(m);
  }
  return out;
}

void write_confidence_csv(const std::string& path, const ConfidenceCurve& curve) {
  auto out = open_for_write(path);
  out << "sample_size,confidence\n";
  for (std::size_t i = 0; i < curve.sample_sizes.size(); ++i) {
    out << curve.sample_sizes[i] << ',' << format_double(curve.confidence[i]) << "\n";
  }
  finish_write(out, path);
}

// ---------------------------------------------------------------------------
// Experiment config
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void cfg_fail(const std::string& origin, const std::string& path,
                           const std::string& what) {
  throw std::invalid_argument(origin + ": config error at " +
                              (path.empty() ? "<root>" : path) + ": " + what);
}

std::string join_path(const std::string& base, const char* key) {
  return base.empty() ? std::string(key) : base + "." + key;
}

void check_keys(const json& obj, const std::string& origin, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) cfg_fail(origin, path.empty() ? it.key() : path + "." + it.key(), "unknown key");
  }
}

const json* find_key(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double cfg_number(const json& obj, const std::string& origin, const std::string& path,
                  const char* key, std::optional<double> fallback) {
  const json* v = find_key(obj, key);
  if (v == nullptr) {
    if (fallback) return *fallback;
    cfg_fail(origin, join_path(path, key), "missing required number");
  }
  if (!v->is_number()) cfg_fail(origin, join_path(path, key), "expected a number");
  return v->get<double>();
}

long cfg_integer(const json& obj, const std::string& origin, const std::string& path,
                 const char* key, std::optional<long> fallback) {
  const json* v = find_key(obj, key);
  if (v == nullptr) {
    if (fallback) return *fallback;
    cfg_fail(origin, join_path(path, key), "missing required integer");
  }
  if (!v->is_number_integer()) cfg_fail(origin, join_path(path, key), "expected an integer");
  return v->get<long>();
}

std::string cfg_string(const json& obj, const std::string& origin, const std::string& path,
                       const char* key, std::optional<std::string> fallback) {
  const json* v = find_key(obj, key);
  if (v == nullptr) {
    if (fallback) return *fallback;
    cfg_fail(origin, join_path(path, key), "missing required string");
  }
  if (!v->is_string()) cfg_fail(origin, join_path(path, key), "expected a string");
  return v->get<std::string>();
}

std::uint64_t cfg_u64(const json& obj, const std::string& origin, const std::string& path,
                      const char* key, std::optional<std::uint64_t> fallback) {
  const json* v = find_key(obj, key);
  if (v == nullptr) {
    if (fallback) return *fallback;
    cfg_fail(origin, join_path(path, key), "missing required integer");
  }
  if (v->is_number_unsigned()) return v->get<std::uint64_t>();
  if (v->is_number_integer() && v->get<long long>() >= 0) {
    return static_cast<std::uint64_t>(v->get<long long>());
  }
  cfg_fail(origin, join_path(path, key), "expected a non-negative integer");
}

DifficultyScale cfg_scale(const json& obj, const std::string& origin, const std::string& path) {
  if (!obj.is_object()) cfg_fail(origin, path, "expected an object with min and max");
  check_keys(obj, origin, path, {"min", "max"});
  DifficultyScale scale;
  scale.min = cfg_number(obj, origin, path, "min", std::nullopt);
  scale.max = cfg_number(obj, origin, path, "max", std::nullopt);
  try {
    scale.validate();
  } catch (const std::invalid_argument& e) {
    cfg_fail(origin, path, e.what());
  }
  return scale;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text,
                                         const std::string& origin) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(origin + ": invalid JSON: " + e.what());
  }
  if (!root.is_object()) {
    throw std::invalid_argument(origin + ": config must be a JSON object");
  }
  check_keys(root, origin, "", {"seed", "total_steps", "eval_every", "outcome_mode",
                                "smoothing", "scheduler", "sampler", "learner", "dataset"});

  ExperimentConfig cfg;
  cfg.seed = cfg_u64(root, origin, "", "seed", std::uint64_t{0});
  cfg.total_steps = cfg_integer(root, origin, "", "total_steps", 100L);
  if (cfg.total_steps < 1) cfg_fail(origin, "total_steps", "must be >= 1");
  cfg.eval_every = cfg_integer(root, origin, "", "eval_every", 5L);
  if (cfg.eval_every < 1) cfg_fail(origin, "eval_every", "must be >= 1");
  cfg.smoothing = cfg_number(root, origin, "", "smoothing", 0.3);
  if (!(cfg.smoothing > 0.0 && cfg.smoothing <= 1.0)) {
    cfg_fail(origin, "smoothing", "must lie in (0, 1]");
  }
  try {
    cfg.outcome_mode =
        outcome_mode_from_string(cfg_string(root, origin, "", "outcome_mode", "expected"));
  } catch (const std::invalid_argument& e) {
    cfg_fail(origin, "outcome_mode", e.what());
  }

  bool scale_given = false;
  if (const json* sched = find_key(root, "scheduler")) {
    const std::string path = "scheduler";
    if (!sched->is_object()) cfg_fail(origin, path, "expected an object");
    check_keys(*sched, origin, path, {"eta", "alpha", "beta", "t_init", "batch_size", "scale"});
    cfg.scheduler.eta = cfg_number(*sched, origin, path, "eta", cfg.scheduler.eta);
    if (!(cfg.scheduler.eta > 0.0)) cfg_fail(origin, "scheduler.eta", "must be > 0");
    cfg.scheduler.alpha = cfg_number(*sched, origin, path, "alpha", cfg.scheduler.alpha);
    if (!(cfg.scheduler.alpha > 0.0)) cfg_fail(origin, "scheduler.alpha", "must be > 0");
    cfg.scheduler.beta = cfg_number(*sched, origin, path, "beta", cfg.scheduler.beta);
    if (!(cfg.scheduler.beta > 0.0 && cfg.scheduler.beta < 1.0)) {
      cfg_fail(origin, "scheduler.beta", "must lie in (0, 1)");
    }
    cfg.scheduler.t_init = cfg_number(*sched, origin, path, "t_init", cfg.scheduler.t_init);
    const long batch = cfg_integer(*sched, origin, path, "batch_size",
                                   static_cast<long>(cfg.scheduler.batch_size));
    if (batch < 1) cfg_fail(origin, "scheduler.batch_size", "must be >= 1");
    cfg.scheduler.batch_size = static_cast<int>(batch);
    if (const json* scale = find_key(*sched, "scale")) {
      cfg.scheduler.scale = cfg_scale(*scale, origin, "scheduler.scale");
      scale_given = true;
    }
  }

  if (const json* sampler = find_key(root, "sampler")) {
    const std::string path = "sampler";
    if (!sampler->is_object()) cfg_fail(origin, path, "expected an object");
    check_keys(*sampler, origin, path, {"kind", "exclusion_window", "fixed_curriculum", "filter"});
    try {
      cfg.sampler = sampler_kind_from_string(cfg_string(*sampler, origin, path, "kind", "adarft"));
    } catch (const std::invalid_argument& e) {
      cfg_fail(origin, "sampler.kind", e.what());
    }
    const long window = cfg_integer(*sampler, origin, path, "exclusion_window", 0L);
    if (window < 0) cfg_fail(origin, "sampler.exclusion_window", "must be >= 0");
    cfg.exclusion_window = static_cast<int>(window);
    if (const json* fc = find_key(*sampler, "fixed_curriculum")) {
      const std::string fc_path = "sampler.fixed_curriculum";
      if (!fc->is_object()) cfg_fail(origin, fc_path, "expected an object");
      check_keys(*fc, origin, fc_path, {"t_min", "t_max", "total_steps"});
      cfg.fixed_curriculum.t_min = cfg_number(*fc, origin, fc_path, "t_min", std::nullopt);
      cfg.fixed_curriculum.t_max = cfg_number(*fc, origin, fc_path, "t_max", std::nullopt);
      cfg.fixed_curriculum.total_steps =
          cfg_integer(*fc, origin, fc_path, "total_steps", cfg.total_steps);
      try {
        cfg.fixed_curriculum.validate();
      } catch (const std::invalid_argument& e) {
        cfg_fail(origin, fc_path, e.what());
      }
      cfg.derive_fixed_curriculum = false;
    }
    if (const json* filter = find_key(*sampler, "filter")) {
      const std::string f_path = "sampler.filter";
      if (!filter->is_object()) cfg_fail(origin, f_path, "expected an object");
      check_keys(*filter, origin, f_path, {"low", "high", "attempts"});
      cfg.filter.low = cfg_number(*filter, origin, f_path, "low", cfg.filter.low);
      cfg.filter.high = cfg_number(*filter, origin, f_path, "high", cfg.filter.high);
      const long attempts =
          cfg_integer(*filter, origin, f_path, "attempts", static_cast<long>(cfg.filter.attempts));
      cfg.filter.attempts = static_cast<int>(attempts);
      try {
        cfg.filter.validate();
      } catch (const std::invalid_argument& e) {
        cfg_fail(origin, f_path, e.what());
      }
    }
  }

  if (const json* learner = find_key(root, "learner")) {
    const std::string path = "learner";
    if (!learner->is_object()) cfg_fail(origin, path, "expected an object");
    check_keys(*learner, origin, path, {"skill", "discrimination", "learn_rate"});
    cfg.learner.skill = cfg_number(*learner, origin, path, "skill", cfg.learner.skill);
    cfg.learner.discrimination =
        cfg_number(*learner, origin, path, "discrimination", cfg.learner.discrimination);
    cfg.learner.learn_rate =
        cfg_number(*learner, origin, path, "learn_rate", cfg.learner.learn_rate);
    try {
      cfg.learner.validate();
    } catch (const std::invalid_argument& e) {
      cfg_fail(origin, path, e.what());
    }
  }

  const json* dataset = find_key(root, "dataset");
  if (dataset == nullptr) cfg_fail(origin, "dataset", "missing required object");
  if (!dataset->is_object()) cfg_fail(origin, "dataset", "expected an object");
  check_keys(*dataset, origin, "dataset", {"path", "generate"});
  const json* ds_path = find_key(*dataset, "path");
  const json* ds_gen = find_key(*dataset, "generate");
  if ((ds_path == nullptr) == (ds_gen == nullptr)) {
    cfg_fail(origin, "dataset", "exactly one of \"path\" or \"generate\" is required");
  }
  if (ds_path != nullptr) {
    if (!ds_path->is_string() || ds_path->get<std::string>().empty()) {
      cfg_fail(origin, "dataset.path", "expected a non-empty string");
    }
    cfg.dataset.kind = DatasetSource::Kind::File;
    cfg.dataset.path = ds_path->get<std::string>();
    cfg.dataset.derive_generation_seed = false;
  } else {
    const std::string g_path = "dataset.generate";
    if (!ds_gen->is_object()) cfg_fail(origin, g_path, "expected an object");
    check_keys(*ds_gen, origin, g_path, {"kind", "size", "scale", "seed", "beta_a", "beta_b"});
    cfg.dataset.kind = DatasetSource::Kind::Generate;
    try {
      cfg.dataset.spec.kind =
          distribution_kind_from_string(cfg_string(*ds_gen, origin, g_path, "kind", std::nullopt));
    } catch (const std::invalid_argument& e) {
      cfg_fail(origin, "dataset.generate.kind", e.what());
    }
    const long size = cfg_integer(*ds_gen, origin, g_path, "size", 0L);
    if (find_key(*ds_gen, "size") != nullptr && size < 1) {
      cfg_fail(origin, "dataset.generate.size", "must be >= 1");
    }
    cfg.dataset.spec.size = static_cast<std::size_t>(size);
    if (const json* scale = find_key(*ds_gen, "scale")) {
      cfg.dataset.spec.scale = cfg_scale(*scale, origin, "dataset.generate.scale");
    }
    if (find_key(*ds_gen, "seed") != nullptr) {
      cfg.dataset.spec.seed = cfg_u64(*ds_gen, origin, g_path, "seed", std::nullopt);
      cfg.dataset.derive_generation_seed = false;
    } else {
      cfg.dataset.derive_generation_seed = true;
    }
    cfg.dataset.spec.skew_a = cfg_number(*ds_gen, origin, g_path, "beta_a", 2.0);
    cfg.dataset.spec.skew_b = cfg_number(*ds_gen, origin, g_path, "beta_b", 5.0);
    if (!(cfg.dataset.spec.skew_a > 0.0) || !(cfg.dataset.spec.skew_b > 0.0)) {
      cfg_fail(origin, "dataset.generate.beta_a", "shape parameters must be > 0");
    }
  }

  // Scale resolution: explicit wins; generated datasets reuse their generation
  // scale; file datasets fall back to the observed min/max.
  if (!scale_given) {
    if (cfg.dataset.kind == DatasetSource::Kind::Generate) {
      cfg.scheduler.scale = cfg.dataset.spec.scale;
    } else {
      cfg.derive_scale_from_data = true;
    }
  }

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(origin + ": config error: " + std::string(e.what()));
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  auto in = open_for_read(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str(), path);
}

std::string experiment_config_to_json(const ExperimentConfig& cfg) {
  ordered_json scheduler;
  scheduler["eta"] = cfg.scheduler.eta;
  scheduler["alpha"] = cfg.scheduler.alpha;
  scheduler["beta"] = cfg.scheduler.beta;
  scheduler["t_init"] = cfg.scheduler.t_init;
  scheduler["batch_size"] = cfg.scheduler.batch_size;
  scheduler["scale"] = ordered_json{{"min", cfg.scheduler.scale.min},
                                    {"max", cfg.scheduler.scale.max}};

  ordered_json sampler;
  sampler["kind"] = to_string(cfg.sampler);
  sampler["exclusion_window"] = cfg.exclusion_window;
  sampler["fixed_curriculum"] = ordered_json{{"t_min", cfg.fixed_curriculum.t_min},
                                             {"t_max", cfg.fixed_curriculum.t_max},
                                             {"total_steps", cfg.fixed_curriculum.total_steps}};
  sampler["filter"] = ordered_json{{"low", cfg.filter.low},
                                   {"high", cfg.filter.high},
                                   {"attempts", cfg.filter.attempts}};

  ordered_json learner;
  learner["skill"] = cfg.learner.skill;
  learner["discrimination"] = cfg.learner.discrimination;
  learner["learn_rate"] = cfg.learner.learn_rate;

  ordered_json dataset;
  if (cfg.dataset.kind == DatasetSource::Kind::File) {
    dataset["path"] = cfg.dataset.path;
  } else {
    ordered_json gen;
    gen["kind"] = to_string(cfg.dataset.spec.kind);
    gen["size"] = cfg.dataset.spec.size;
    gen["scale"] = ordered_json{{"min", cfg.dataset.spec.scale.min},
                                {"max", cfg.dataset.spec.scale.max}};
    gen["seed"] = cfg.dataset.spec.seed;
    gen["beta_a"] = cfg.dataset.spec.skew_a;
    gen["beta_b"] = cfg.dataset.spec.skew_b;
    dataset["generate"] = std::move(gen);
  }

  ordered_json root;
  root["seed"] = cfg.seed;
  root["total_steps"] = cfg.total_steps;
  root["eval_every"] = cfg.eval_every;
  root["outcome_mode"] = to_string(cfg.outcome_mode);
  root["smoothing"] = cfg.smoothing;
  root["scheduler"] = std::move(scheduler);
  root["sampler"] = std::move(sampler);
  root["learner"] = std::move(learner);
  root["dataset"] = std::move(dataset);
  return root.dump(2) + "\n";
}

std::string run_summary_to_json(const RunResult& result) {
  ordered_json root;
  root["sampler"] = to_string(result.config.sampler);
  root["seed"] = result.config.seed;
  root["total_steps"] = result.config.total_steps;
  root["outcome_mode"] = to_string(result.config.outcome_mode);
  root["final_skill"] = result.summary.final_skill;
  root["final_smoothed_skill"] = result.summary.final_smoothed_skill;
  root["steady_r_avg"] = result.summary.steady_r_avg;
  root["steady_batch_difficulty"] = result.summary.steady_batch_difficulty;
  root["total_batch_cost"] = result.summary.total_batch_cost;
  return root.dump(2) + "\n";
}

}  // namespace adarft
