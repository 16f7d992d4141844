#pragma once
// Deterministic randomness for everything in this library.
//
// The generator is SplitMix64 (Steele, Lea and Flood's SplittableRandom
// finaliser, the same routine xoshiro uses for seeding). The whole output
// sequence is pinned by the 64-bit seed and nothing depends on which standard
// library we were compiled against, unlike std::uniform_*_distribution.
// Callers that promise reproducibility (graph sampling, edge colouring, the
// experiment harness) all draw from this and document their consumption
// order, so a seed means the same bits everywhere.

#include <cassert>
#include <cstdint>

namespace rainbow {

// Output finaliser of SplitMix64, usable standalone as an avalanche mix.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return splitmix64_mix(state_);
  }

  // Uniform double in [0, 1), using the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    assert(bound > 0);
    // 2^64 mod bound; draws at or above 2^64 - rem would skew the result
    const std::uint64_t rem = (~bound + 1) % bound;
    std::uint64_t draw = next();
    while (rem != 0 && draw > ~std::uint64_t{0} - rem) draw = next();
    return draw % bound;
  }

 private:
  std::uint64_t state_;
};

// Deterministic sub-stream derivation: feeds seed and salt through one
// SplitMix64 step so unrelated consumers (graph bits, colour bits, pair
// picks) never share a stream. Pure function, identical on every platform.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return splitmix64_mix(seed ^ (0x9E3779B97F4A7C15ull * (salt + 0x632BE59BD9B4E019ull)));
}

}  // namespace rainbow
