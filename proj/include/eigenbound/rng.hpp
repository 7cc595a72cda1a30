#pragma once

#include <cmath>
#include <cstdint>

namespace eigenbound {

// Counter-based generator: out(i) = mix64(seed + (i+1)*GOLDEN) with the
// SplitMix64 finalizer. Random access, no state, and the constants below
// fully specify the stream, so fixtures reproduce across languages.
//   GOLDEN = 0x9E3779B97F4A7C15
//   MIX1   = 0xBF58476D1CE4E5B9  (xor-shift 30)
//   MIX2   = 0x94D049BB133111EB  (xor-shift 27, final shift 31)
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform strictly inside (0, 1): (h + 1/2) / 2^53 with h the top 53 bits.
  double uniform01(std::uint64_t counter) const {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller on counters (2c, 2c+1).
  double gaussian(std::uint64_t pair_counter) const {
    const double u1 = uniform01(2 * pair_counter);
    const double u2 = uniform01(2 * pair_counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925287 * u2);
  }

  // Uniform in [-1, 1).
  double uniform_pm1(std::uint64_t counter) const {
    return 2.0 * uniform01(counter) - 1.0;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

}  // namespace eigenbound
