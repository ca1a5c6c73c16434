#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "revsynth/bit_pattern.hpp"

namespace revsynth {

// A mixed-polarity multiple-control Toffoli gate: flips the target line iff
// every positive control reads 1 and every negative control reads 0.
// Controls are stored as two disjoint line masks; the target line belongs to
// neither. The empty control set is legal (an unconditional NOT).
class ToffoliGate {
 public:
  ToffoliGate(int width, int target, std::uint32_t positive, std::uint32_t negative);

  int width() const { return width_; }
  int target() const { return target_; }
  std::uint32_t positive() const { return pos_; }
  std::uint32_t negative() const { return neg_; }
  std::uint32_t control_lines() const { return pos_ | neg_; }
  int control_count() const;

  std::uint32_t apply(std::uint32_t pattern) const {
    if ((pattern & pos_) == pos_ && (pattern & neg_) == 0) return pattern ^ target_bit();
    return pattern;
  }
  BitPattern apply(const BitPattern& p) const;

  // Number of patterns whose image differs: 2^(width - controls - 1) pairs,
  // i.e. 2^(width - controls) points. A full-control gate moves exactly 2.
  std::uint64_t moved_points() const;

  // Text form, e.g. "T(b',c:a)". Controls appear in ascending line order with
  // a trailing apostrophe marking negative polarity; "T(:a)" is a bare NOT.
  std::string text() const;
  static ToffoliGate parse(std::string_view text, int width);

  friend bool operator==(const ToffoliGate&, const ToffoliGate&) = default;

 private:
  std::uint32_t target_bit() const { return 1u << target_; }

  int width_;
  int target_;
  std::uint32_t pos_;
  std::uint32_t neg_;
};

}  // namespace revsynth
