#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace revsynth {

inline constexpr int kMaxLines = 16;

// One row value: an n-bit assignment encoded as an unsigned integer < 2^n.
// Bit 0 is line "a" (least significant), bit n-1 the most significant line.
struct BitPattern {
  std::uint32_t value = 0;
  int width = 1;

  BitPattern() = default;
  BitPattern(std::uint32_t value, int width);

  bool bit(int line) const { return (value >> line) & 1u; }

  // Most-significant-line-first rendering, e.g. 5 over 3 lines -> "101".
  std::string bits() const;

  friend bool operator==(const BitPattern&, const BitPattern&) = default;
};

// Number of bit positions where p and q differ. Throws on width mismatch.
int hamming(const BitPattern& p, const BitPattern& q);

// Display name of a line index: 0 -> "a", 1 -> "b", ...
std::string line_name(int line);

// Accepts the letter form ("a") and the numeric alias ("x1"). Throws if the
// token is malformed or the index is not below `width`.
int parse_line_name(std::string_view token, int width);

namespace detail {
inline int hamming_raw(std::uint32_t a, std::uint32_t b) {
  return std::popcount(a ^ b);
}
}  // namespace detail

}  // namespace revsynth
