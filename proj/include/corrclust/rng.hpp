#pragma once

#include <cstdint>
#include <random>

namespace corrclust {

/// Pseudo-random stream used by every randomized routine: std::mt19937_64
/// seeded with SplitMix64(seed). Bounded draws use Lemire's multiply-shift
/// rejection method, so sequences are identical across standard libraries
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  static std::uint64_t splitmix64(std::uint64_t x);

  /// Independent stream for sub-task `index` (e.g. a Monte-Carlo trial).
  Rng split(std::uint64_t index) const;

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace corrclust
