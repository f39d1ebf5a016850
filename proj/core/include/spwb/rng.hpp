#pragma once

#include <cstdint>

namespace spwb {

// SplitMix64 stream. Self-contained so sampled values are identical across
// platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  // Independent stream for trial `index` under a master seed.
  static Rng for_trial(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

}  // namespace spwb
