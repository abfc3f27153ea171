// End-to-end checks against the installed CLI binary (path injected by the
// build). Each case drives real subprocesses and inspects the artifacts.
#include <doctest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "adarft/io.hpp"
#include "oracles.hpp"

namespace {

const char* cli_path() { return ADARFT_CLI_PATH; }

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const oracle::TempDir& dir, const std::string& args) {
  static int counter = 0;
  const std::string out_path = dir.file("stdout." + std::to_string(counter));
  const std::string err_path = dir.file("stderr." + std::to_string(counter));
  ++counter;
  const std::string cmd = std::string(cli_path()) + " " + args + " > " + out_path +
                          " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = oracle::slurp(out_path);
  result.err = oracle::slurp(err_path);
  return result;
}

const std::string kSmallConfig = R"({
  "seed": 3,
  "total_steps": 25,
  "outcome_mode": "expected",
  "scheduler": {"eta": 20, "batch_size": 32},
  "learner": {"skill": 10, "discrimination": 0.1, "learn_rate": 4},
  "dataset": {"generate": {"kind": "uniform", "size": 500}}
})";

}  // namespace

TEST_CASE("gen-dataset writes bounded problems and is byte-deterministic") {
  oracle::TempDir dir("cli");
  const std::string out1 = dir.file("ee1.jsonl");
  const std::string out2 = dir.file("ee2.jsonl");

  auto r1 = run_cli(dir, "gen-dataset --kind easy-extreme --size 100 --seed 7 --out " + out1);
  REQUIRE(r1.exit_code == 0);
  const auto records = adarft::read_dataset(out1);
  REQUIRE(records.size() == 100);
  for (const auto& rec : records) CHECK(rec.difficulty <= 15.0);

  auto r2 = run_cli(dir, "gen-dataset --kind easy-extreme --size 100 --seed 7 --out " + out2);
  REQUIRE(r2.exit_code == 0);
  CHECK(oracle::slurp(out1) == oracle::slurp(out2));
}

TEST_CASE("gen-dataset usage errors exit non-zero") {
  oracle::TempDir dir("cli");
  CHECK(run_cli(dir, "gen-dataset --kind uniform --size 0 --out " + dir.file("x.jsonl"))
            .exit_code != 0);
  CHECK(run_cli(dir, "gen-dataset --kind mystery --out " + dir.file("x.jsonl")).exit_code !=
        0);
  CHECK(run_cli(dir, "gen-dataset --kind uniform").exit_code != 0);  // missing --out
  CHECK(run_cli(dir, "").exit_code != 0);                            // subcommand required
}

TEST_CASE("estimate scores rollouts and reports malformed lines") {
  oracle::TempDir dir("cli");
  const std::string rollouts = dir.file("rollouts.jsonl");
  oracle::spit(rollouts,
               "{\"problem_id\":\"a\",\"attempts\":128,\"successes\":64}\n"
               "{\"problem_id\":\"b\",\"attempts\":128,\"successes\":0}\n");
  const std::string out = dir.file("scored.jsonl");
  auto r = run_cli(dir, "estimate --rollouts " + rollouts + " --out " + out);
  REQUIRE(r.exit_code == 0);
  const auto scored = adarft::read_dataset(out);
  REQUIRE(scored.size() == 2);
  CHECK(scored[0].difficulty == 50.0);
  CHECK(scored[1].difficulty == 100.0);

  const std::string bad = dir.file("bad.jsonl");
  oracle::spit(bad,
               "{\"problem_id\":\"a\",\"attempts\":128,\"successes\":64}\n"
               "{\"problem_id\":\"b\",\"attempts\":128,\"successes\":129}\n");
  auto rbad = run_cli(dir, "estimate --rollouts " + bad + " --out " + dir.file("nope.jsonl"));
  CHECK(rbad.exit_code != 0);
  CHECK(rbad.err.find(":2") != std::string::npos);  // line number in the message

  const std::string empty = dir.file("empty.jsonl");
  oracle::spit(empty, "");
  auto rempty = run_cli(dir, "estimate --rollouts " + empty + " --out " + dir.file("e.jsonl"));
  CHECK(rempty.exit_code == 0);
  CHECK(oracle::slurp(dir.file("e.jsonl")).empty());
  CHECK(rempty.err.find("no rollout records") != std::string::npos);  // warning emitted
}

TEST_CASE("confidence defaults and full-sample row") {
  oracle::TempDir dir("cli");
  const std::string rollouts = dir.file("rollouts.jsonl");
  oracle::spit(rollouts, "{\"problem_id\":\"a\",\"attempts\":128,\"successes\":64}\n");
  const std::string out = dir.file("conf.csv");
  auto r = run_cli(dir, "confidence --rollouts " + rollouts + " --sizes 128 --seed 5 --out " + out);
  REQUIRE(r.exit_code == 0);
  CHECK(oracle::slurp(out) == "sample_size,confidence\n128,1\n");

  // Defaults (tolerance 0.05, trials 10) are accepted without flags.
  auto rdef = run_cli(dir, "confidence --rollouts " + rollouts + " --sizes 16,64,128 --out " +
                               dir.file("conf2.csv"));
  CHECK(rdef.exit_code == 0);
}

TEST_CASE("correlate matches ids across files") {
  oracle::TempDir dir("cli");
  const std::string rollouts = dir.file("rollouts.jsonl");
  const std::string scores = dir.file("scores.jsonl");
  // Higher judged level, lower solve rate: strongly negative correlation.
  oracle::spit(rollouts,
               "{\"problem_id\":\"a\",\"attempts\":40,\"successes\":36}\n"
               "{\"problem_id\":\"b\",\"attempts\":40,\"successes\":24}\n"
               "{\"problem_id\":\"c\",\"attempts\":40,\"successes\":10}\n"
               "{\"problem_id\":\"unmatched\",\"attempts\":40,\"successes\":1}\n");
  oracle::spit(scores,
               "{\"problem_id\":\"a\",\"level\":1}\n"
               "{\"problem_id\":\"b\",\"level\":3}\n"
               "{\"problem_id\":\"c\",\"level\":5}\n");
  const std::string out = dir.file("corr.json");
  auto r = run_cli(dir, "correlate --rollouts " + rollouts + " --scores " + scores +
                            " --out " + out);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("pearson_r=-") != std::string::npos);
  CHECK(r.out.find("3 matched") != std::string::npos);
  CHECK(oracle::slurp(out).find("\"matched\": 3") != std::string::npos);
}

TEST_CASE("rescale-judge maps levels onto the target scale") {
  oracle::TempDir dir("cli");
  const std::string scores = dir.file("scores.jsonl");
  oracle::spit(scores,
               "{\"problem_id\":\"a\",\"level\":1}\n"
               "{\"problem_id\":\"b\",\"level\":3}\n"
               "{\"problem_id\":\"c\",\"level\":5}\n");
  const std::string out = dir.file("rescaled.jsonl");
  auto r = run_cli(dir, "rescale-judge --scores " + scores + " --out " + out);
  REQUIRE(r.exit_code == 0);
  const auto records = adarft::read_dataset(out);
  REQUIRE(records.size() == 3);
  CHECK(records[0].difficulty == 0.0);
  CHECK(records[1].difficulty == 50.0);
  CHECK(records[2].difficulty == 100.0);
}

TEST_CASE("filter writes retained ids or a dataset subset") {
  oracle::TempDir dir("cli");
  const std::string rollouts = dir.file("rollouts.jsonl");
  oracle::spit(rollouts,
               "{\"problem_id\":\"a\",\"attempts\":40,\"successes\":2}\n"
               "{\"problem_id\":\"b\",\"attempts\":40,\"successes\":20}\n"
               "{\"problem_id\":\"c\",\"attempts\":40,\"successes\":38}\n");
  const std::string ids_out = dir.file("kept.txt");
  auto r = run_cli(dir, "filter --rollouts " + rollouts + " --out " + ids_out);
  REQUIRE(r.exit_code == 0);
  CHECK(oracle::slurp(ids_out) == "b\n");

  const std::string data = dir.file("data.jsonl");
  oracle::spit(data,
               "{\"id\":\"a\",\"difficulty\":5}\n"
               "{\"id\":\"b\",\"difficulty\":50}\n"
               "{\"id\":\"c\",\"difficulty\":95}\n");
  const std::string subset = dir.file("subset.jsonl");
  auto r2 = run_cli(dir, "filter --rollouts " + rollouts + " --dataset " + data + " --out " +
                             subset);
  REQUIRE(r2.exit_code == 0);
  const auto kept = adarft::read_dataset(subset);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].id == "b");
}

TEST_CASE("train emits metrics, summary, and a reloadable config snapshot") {
  oracle::TempDir dir("cli");
  const std::string cfg_path = dir.file("exp.json");
  oracle::spit(cfg_path, kSmallConfig);
  const std::string out1 = dir.file("run1");
  const std::string out2 = dir.file("run2");

  auto r = run_cli(dir, "train --config " + cfg_path + " --out " + out1);
  REQUIRE(r.exit_code == 0);
  const auto metrics = adarft::read_metrics_csv(out1 + "/metrics.csv");
  CHECK(metrics.size() == 25);

  auto r2 = run_cli(dir, "train --config " + cfg_path + " --out " + out2);
  REQUIRE(r2.exit_code == 0);
  CHECK(oracle::slurp(out1 + "/metrics.csv") == oracle::slurp(out2 + "/metrics.csv"));
  CHECK(oracle::slurp(out1 + "/summary.json") == oracle::slurp(out2 + "/summary.json"));
  CHECK(oracle::slurp(out1 + "/config_resolved.json") ==
        oracle::slurp(out2 + "/config_resolved.json"));

  // The snapshot itself is a valid config and reproduces the metrics.
  const std::string out3 = dir.file("run3");
  auto r3 = run_cli(dir, "train --config " + out1 + "/config_resolved.json --out " + out3);
  REQUIRE(r3.exit_code == 0);
  CHECK(oracle::slurp(out1 + "/metrics.csv") == oracle::slurp(out3 + "/metrics.csv"));

  // A seed override changes the run.
  const std::string out4 = dir.file("run4");
  auto r4 = run_cli(dir, "train --config " + cfg_path + " --seed 99 --out " + out4);
  REQUIRE(r4.exit_code == 0);
  CHECK(oracle::slurp(out1 + "/metrics.csv") != oracle::slurp(out4 + "/metrics.csv"));
}

TEST_CASE("train with a single step emits a one-row CSV") {
  oracle::TempDir dir("cli");
  const std::string cfg_path = dir.file("exp.json");
  oracle::spit(cfg_path, R"({
    "total_steps": 1,
    "scheduler": {"batch_size": 8},
    "dataset": {"generate": {"kind": "uniform", "size": 50}}
  })");
  const std::string out = dir.file("run");
  auto r = run_cli(dir, "train --config " + cfg_path + " --out " + out);
  REQUIRE(r.exit_code == 0);
  CHECK(adarft::read_metrics_csv(out + "/metrics.csv").size() == 1);
}

TEST_CASE("train config errors carry field paths and exit non-zero") {
  oracle::TempDir dir("cli");
  const std::string cfg_path = dir.file("bad.json");
  oracle::spit(cfg_path, R"({"total_steps": 10})");  // no dataset
  auto r = run_cli(dir, "train --config " + cfg_path + " --out " + dir.file("run"));
  CHECK(r.exit_code != 0);
  CHECK(r.err.find("dataset") != std::string::npos);

  oracle::spit(cfg_path, R"({"dataset": {"path": "/missing/data.jsonl"}})");
  auto r2 = run_cli(dir, "train --config " + cfg_path + " --out " + dir.file("run"));
  CHECK(r2.exit_code != 0);
}

TEST_CASE("compare needs two methods including the reference") {
  oracle::TempDir dir("cli");
  const std::string cfg_path = dir.file("exp.json");
  oracle::spit(cfg_path, kSmallConfig);

  auto solo = run_cli(dir, "compare --config " + cfg_path +
                               " --methods adarft --seeds 1 --out " + dir.file("c1"));
  CHECK(solo.exit_code != 0);

  auto no_ref = run_cli(dir, "compare --config " + cfg_path +
                                 " --methods static,filtered --seeds 1 --out " + dir.file("c2"));
  CHECK(no_ref.exit_code != 0);

  const std::string out = dir.file("c3");
  auto ok = run_cli(dir, "compare --config " + cfg_path +
                             " --methods adarft,static --seeds 1,2 --at-step 15 --out " + out);
  REQUIRE(ok.exit_code == 0);
  const std::string agg = oracle::slurp(out + "/comparison.csv");
  CHECK(agg.rfind("method,aggregate,final_skill,steady_r_avg,extra_steps\n", 0) == 0);
  CHECK(agg.find("adarft,median") != std::string::npos);
  const std::string raw = oracle::slurp(out + "/comparison_runs.csv");
  CHECK(raw.find("adarft,1,") != std::string::npos);
  // The reference row matches itself with zero extra steps.
  for (const auto& line : {std::string("adarft,1,"), std::string("adarft,2,")}) {
    const auto pos = raw.find(line);
    REQUIRE(pos != std::string::npos);
    const auto eol = raw.find('\n', pos);
    CHECK(raw.substr(pos, eol - pos).rfind(",0") == raw.find('\n', pos) - pos - 2);
  }
}

TEST_CASE("ablate-beta writes one row per beta") {
  oracle::TempDir dir("cli");
  const std::string cfg_path = dir.file("exp.json");
  oracle::spit(cfg_path, kSmallConfig);
  const std::string out = dir.file("abl");
  auto r = run_cli(dir, "ablate-beta --config " + cfg_path +
                            " --betas 0.3,0.5 --seeds 1,2 --out " + out);
  REQUIRE(r.exit_code == 0);
  const std::string csv = oracle::slurp(out + "/beta_ablation.csv");
  CHECK(csv.rfind("beta,runs,mean_final_skill,mean_steady_r_avg\n", 0) == 0);
  CHECK(csv.find("0.29999999999999999,2,") != std::string::npos);
  CHECK(csv.find("0.5,2,") != std::string::npos);

  auto bad = run_cli(dir, "ablate-beta --config " + cfg_path +
                              " --betas 1.5 --seeds 1 --out " + dir.file("abl2"));
  CHECK(bad.exit_code != 0);
}
