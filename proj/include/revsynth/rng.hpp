#pragma once

#include <cstdint>

namespace revsynth {

// Deterministic 64-bit linear congruential generator (Knuth's MMIX
// multiplier 6364136223846793005 and increment 1442695040888963407). Each
// draw returns the top 31 bits of the state; below(bound) reduces a draw
// modulo `bound`. Fixed here so that seeded runs reproduce byte-identical
// circuits on every platform.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_ >> 33;
  }

  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }

 private:
  std::uint64_t state_;
};

}  // namespace revsynth
