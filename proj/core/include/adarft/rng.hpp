// Deterministic random-number utilities. Everything downstream of a seed goes
// through mt19937_64 plus the hand-rolled transforms below, so streams are
// bit-reproducible across platforms and standard-library versions (the
// standard pins the engine but not the distributions).
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace adarft {

// splitmix64 finalizer; good avalanche for seed derivation and tie-break keys.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Stream seed for (master, purpose salt, index). Distinct salts keep the
// per-step selection / outcome / dataset streams independent.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt,
                                 std::uint64_t index = 0) {
  return mix64(master ^ mix64(salt ^ mix64(index)));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1), 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Uniform integer in [0, n), rejection-sampled so the draw is unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Standard normal via Box-Muller; one value per call.
  double normal() {
    constexpr double kTwoPi = 6.28318530717958647692528676655900577;
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  // Gamma(shape, 1) via Marsaglia-Tsang squeeze; shape < 1 boosted.
  double gamma(double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("Rng::gamma: shape must be positive");
    if (shape < 1.0) {
      const double u = 1.0 - uniform01();  // (0, 1]
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform01();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  double beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    const double sum = x + y;
    return sum > 0.0 ? x / sum : 0.5;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace adarft
