#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "adarft/datagen.hpp"
#include "oracles.hpp"

using namespace adarft;

namespace {

DistributionSpec spec_of(DistributionKind kind, std::size_t size, std::uint64_t seed) {
  DistributionSpec spec;
  spec.kind = kind;
  spec.size = size;
  spec.seed = seed;
  return spec;
}

std::vector<double> difficulties_of(const std::vector<ProblemRecord>& records) {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& rec : records) out.push_back(rec.difficulty);
  return out;
}

}  // namespace

TEST_CASE("generate honors size, bounds, and sequential unique ids") {
  for (const auto kind : {DistributionKind::Uniform, DistributionKind::SkewEasy,
                          DistributionKind::SkewDifficult, DistributionKind::EasyExtreme,
                          DistributionKind::HardExtreme}) {
    const auto data = generate(spec_of(kind, 500, 21));
    REQUIRE(data.size() == 500);
    std::set<std::string> ids;
    for (const auto& rec : data) {
      CHECK(rec.difficulty >= 0.0);
      CHECK(rec.difficulty <= 100.0);
      ids.insert(rec.id);
    }
    CHECK(ids.size() == 500);
    CHECK(data.front().id == "p000000");
    CHECK(data.back().id == "p000499");
  }
}

TEST_CASE("extreme kinds respect their hard bounds on every sample") {
  const auto easy = generate(spec_of(DistributionKind::EasyExtreme, 2000, 5));
  for (const auto& rec : easy) CHECK(rec.difficulty <= 15.0);

  const auto hard = generate(spec_of(DistributionKind::HardExtreme, 2000, 5));
  for (const auto& rec : hard) CHECK(rec.difficulty >= 97.0);
}

TEST_CASE("extreme bounds hold on a shifted scale") {
  DistributionSpec spec = spec_of(DistributionKind::HardExtreme, 500, 9);
  spec.scale = DifficultyScale{-40.0, 60.0};
  const auto hard = generate(spec);
  // Top 3% of [-40, 60] starts at 57.
  for (const auto& rec : hard) {
    CHECK(rec.difficulty >= 57.0);
    CHECK(rec.difficulty <= 60.0);
  }
}

TEST_CASE("generation is deterministic under the seed") {
  const auto a = generate(spec_of(DistributionKind::Uniform, 10000, 77));
  const auto b = generate(spec_of(DistributionKind::Uniform, 10000, 77));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].difficulty == b[i].difficulty);
  }
  const auto c = generate(spec_of(DistributionKind::Uniform, 10000, 78));
  CHECK(a[0].difficulty != c[0].difficulty);
}

TEST_CASE("skewed means order around the uniform mean") {
  const std::size_t n = 4000;
  const auto easy = difficulties_of(generate(spec_of(DistributionKind::SkewEasy, n, 13)));
  const auto uniform = difficulties_of(generate(spec_of(DistributionKind::Uniform, n, 13)));
  const auto hard = difficulties_of(generate(spec_of(DistributionKind::SkewDifficult, n, 13)));

  // Expected means ~28.6 / 50 / 71.4; a 3-unit margin dwarfs the Monte-Carlo
  // error at this sample size.
  CHECK(oracle::mean(easy) + 3.0 < oracle::mean(uniform));
  CHECK(oracle::mean(uniform) + 3.0 < oracle::mean(hard));
}

TEST_CASE("default sizes per kind") {
  CHECK(default_dataset_size(DistributionKind::Uniform) == 10000);
  CHECK(default_dataset_size(DistributionKind::SkewEasy) == 10000);
  CHECK(default_dataset_size(DistributionKind::SkewDifficult) == 10000);
  CHECK(default_dataset_size(DistributionKind::EasyExtreme) == 8000);
  CHECK(default_dataset_size(DistributionKind::HardExtreme) == 8000);

  DistributionSpec spec;
  spec.kind = DistributionKind::EasyExtreme;
  spec.size = 0;  // resolves to the kind default
  CHECK(generate(spec).size() == 8000);
}

TEST_CASE("distribution kind names round-trip") {
  for (const auto kind : {DistributionKind::Uniform, DistributionKind::SkewEasy,
                          DistributionKind::SkewDifficult, DistributionKind::EasyExtreme,
                          DistributionKind::HardExtreme}) {
    CHECK(distribution_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(distribution_kind_from_string("bimodal"), std::invalid_argument);
}

TEST_CASE("spec validation") {
  DistributionSpec bad;
  bad.size = 10;
  bad.scale = DifficultyScale{5.0, 5.0};
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
  bad = DistributionSpec{};
  bad.size = 10;
  bad.skew_a = 0.0;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}
