#pragma once

#include <cstdint>

namespace markov {

// Seedable deterministic generator; the sole source of randomness in the
// library. SplitMix64: a 64-bit counter advanced by the golden-ratio
// increment, followed by an avalanche mix. The exact constants are part of
// the reproducibility contract (golden traces are pinned against them), so
// do not change them.
//
// Unit draws use the top 53 bits of one 64-bit output, giving values in
// [0, 1) on the full resolution of a double. One next_u64() per unit draw.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    ++draws_;
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 bits of precision.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on {0, 1, ..., n-1}; one draw.
  std::uint64_t next_below(std::uint64_t n) {
    auto k = static_cast<std::uint64_t>(next_unit() * static_cast<double>(n));
    return k < n ? k : n - 1;
  }

  // Independent stream for a parallel trial; consumes one draw.
  RandomSource spawn() { return RandomSource(next_u64()); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t draws() const noexcept { return draws_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
  std::uint64_t draws_ = 0;
};

}  // namespace markov
