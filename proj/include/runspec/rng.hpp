#pragma once

#include <cstdint>

namespace runspec {

/// splitmix64: a tiny counter-based generator. Word c of the stream for a
/// given seed depends only on (seed, c), so any consumer can jump straight
/// to an arbitrary offset with at_word and read forward from there. That is
/// what makes sampled output independent of how work is divided.
struct SplitMix64 {
  std::uint64_t state = 0;

  static constexpr std::uint64_t kIncrement = 0x9E3779B97F4A7C15ull;

  std::uint64_t next() {
    std::uint64_t z = (state += kIncrement);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Generator positioned so its next output is word `word` of the stream
  /// that starts from `seed`.
  static SplitMix64 at_word(std::uint64_t seed, std::uint64_t word) {
    return SplitMix64{seed + kIncrement * word};
  }
};

}  // namespace runspec
