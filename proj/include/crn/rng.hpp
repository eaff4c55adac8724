#pragma once

#include <cmath>
#include <cstdint>

namespace crn {

/// SplitMix64 (Steele, Lea, Vigna): the 64-bit splittable generator. Used
/// for every randomized routine in this library. Parallel fan-out derives
/// stream k from (seed, k) as state = seed + (k + 1) * GOLDEN_GAMMA with
/// one warm-up step, so trajectories are reproducible independently of
/// scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t stream_index) {
    SplitMix64 g(seed + kGoldenGamma * (stream_index + 1));
    g.next_u64();
    return g;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += kGoldenGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double strictly inside (0, 1).
  double next_unit() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  /// Exponential with the given rate; strictly positive.
  double next_exponential(double rate) { return -std::log(next_unit()) / rate; }

 private:
  std::uint64_t state_;
};

}  // namespace crn
