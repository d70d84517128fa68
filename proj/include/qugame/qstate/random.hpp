#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace qugame::qstate {

/// Deterministic pseudo-random source backed by the 64-bit Mersenne Twister
/// (std::mt19937_64). Its output sequence is fixed by the C++ standard, and the
/// conversions below use only raw engine words, so a given seed yields the same
/// draws on every conforming platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

  /// Index k drawn with probability weights[k] / sum(weights).
  std::size_t sample(std::span<const double> weights);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace qugame::qstate
