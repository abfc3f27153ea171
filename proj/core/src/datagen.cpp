#include "adarft/datagen.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "adarft/rng.hpp"

namespace adarft {

namespace {

// Cut points for the extreme kinds, as fractions of the scale. Easy keeps the
// bottom 15%, hard the top 3%.
constexpr double kEasyCutPct = 15.0;
constexpr double kHardCutPct = 97.0;

// Integer-weighted average of the scale endpoints; keeps the 15 / 97 cut
// points exact on round scales like [0, 100].
double scale_point(const DifficultyScale& scale, double pct) {
  return (scale.min * (100.0 - pct) + scale.max * pct) / 100.0;
}

std::string sequential_id(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "p%06zu", index);
  return std::string(buf);
}

}  // namespace

const char* to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::Uniform: return "uniform";
    case DistributionKind::SkewEasy: return "skew-easy";
    case DistributionKind::SkewDifficult: return "skew-difficult";
    case DistributionKind::EasyExtreme: return "easy-extreme";
    case DistributionKind::HardExtreme: return "hard-extreme";
  }
  return "?";
}

DistributionKind distribution_kind_from_string(std::string_view name) {
  if (name == "uniform") return DistributionKind::Uniform;
  if (name == "skew-easy") return DistributionKind::SkewEasy;
  if (name == "skew-difficult") return DistributionKind::SkewDifficult;
  if (name == "easy-extreme") return DistributionKind::EasyExtreme;
  if (name == "hard-extreme") return DistributionKind::HardExtreme;
  throw std::invalid_argument(
      "unknown distribution kind \"" + std::string(name) +
      "\" (expected uniform, skew-easy, skew-difficult, easy-extreme, or hard-extreme)");
}

std::size_t default_dataset_size(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::EasyExtreme:
    case DistributionKind::HardExtreme:
      return 8000;
    default:
      return 10000;
  }
}

void DistributionSpec::validate() const {
  if (size < 1) throw std::invalid_argument("dataset size must be >= 1");
  scale.validate();
  if (!(skew_a > 0.0) || !(skew_b > 0.0)) {
    throw std::invalid_argument("skew shape parameters must be positive");
  }
}

std::vector<ProblemRecord> generate(const DistributionSpec& spec) {
  DistributionSpec resolved = spec;
  if (resolved.size == 0) resolved.size = default_dataset_size(resolved.kind);
  resolved.validate();

  const DifficultyScale& scale = resolved.scale;
  const double easy_hi = scale_point(scale, kEasyCutPct);
  const double hard_lo = scale_point(scale, kHardCutPct);

  Rng rng(resolved.seed);
  std::vector<ProblemRecord> out;
  out.reserve(resolved.size);
  for (std::size_t i = 0; i < resolved.size; ++i) {
    double d = 0.0;
    switch (resolved.kind) {
      case DistributionKind::Uniform:
        d = scale.min + scale.span() * rng.uniform01();
        break;
      case DistributionKind::SkewEasy:
        d = scale.min + scale.span() * rng.beta(resolved.skew_a, resolved.skew_b);
        break;
      case DistributionKind::SkewDifficult:
        d = scale.min + scale.span() * rng.beta(resolved.skew_b, resolved.skew_a);
        break;
      case DistributionKind::EasyExtreme:
        d = scale.min + (easy_hi - scale.min) * rng.uniform01();
        break;
      case DistributionKind::HardExtreme:
        d = hard_lo + (scale.max - hard_lo) * rng.uniform01();
        break;
    }
    out.push_back(ProblemRecord{sequential_id(i), scale.clamp(d), {}});
  }
  return out;
}

}  // namespace adarft
