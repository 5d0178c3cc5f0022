#pragma once

#include <cstdint>

namespace cvxn {

// Counter-based uniform stream. Sample i of a run with seed s draws its k-th
// variate as mix(key + (k + 1) * kGolden) with key = mix(s ^ mix(i)), where
// mix is the SplitMix64 finalizer (including its golden-ratio increment).
// Each sample owns an independent stream, so results do not depend on the
// order in which samples are evaluated.
class SampleStream {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr SampleStream(std::uint64_t seed, std::uint64_t index)
      : key_(mix(seed ^ mix(index))) {}

  constexpr std::uint64_t next_bits() { return mix(key_ + (++counter_) * kGolden); }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() {
    return static_cast<double>(next_bits() >> 11) * 0x1.0p-53;
  }

  constexpr double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  constexpr std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace cvxn
