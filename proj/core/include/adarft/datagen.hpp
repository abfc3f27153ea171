// Synthetic dataset generation across the studied difficulty marginals:
// uniform, skewed toward either end, and the two single-tail extremes.
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "adarft/types.hpp"

namespace adarft {

enum class DistributionKind { Uniform, SkewEasy, SkewDifficult, EasyExtreme, HardExtreme };

const char* to_string(DistributionKind kind);
DistributionKind distribution_kind_from_string(std::string_view name);

// 10000 for the three full-range kinds, 8000 for the extremes.
std::size_t default_dataset_size(DistributionKind kind);

struct DistributionSpec {
  DistributionKind kind = DistributionKind::Uniform;
  std::size_t size = 0;  // 0 selects default_dataset_size(kind)
  DifficultyScale scale;
  std::uint64_t seed = 0;
  // Beta shape parameters behind the skewed kinds: SkewEasy draws
  // Beta(skew_a, skew_b) stretched onto the scale, SkewDifficult the mirror
  // Beta(skew_b, skew_a).
  double skew_a = 2.0;
  double skew_b = 5.0;

  void validate() const;
};

// Deterministic under spec.seed; ids are sequential ("p000000", ...).
// EasyExtreme stays within the bottom 15% of the scale, HardExtreme within
// the top 3%, every sample, not just in expectation.
std::vector<ProblemRecord> generate(const DistributionSpec& spec);

}  // namespace adarft
