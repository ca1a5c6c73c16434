#include "revsynth/bit_pattern.hpp"

#include <stdexcept>

#include "revsynth/errors.hpp"

namespace revsynth {

BitPattern::BitPattern(std::uint32_t value, int width) : value(value), width(width) {
  if (width < 1 || width > kMaxLines)
    throw std::invalid_argument("pattern width must be between 1 and " +
                                std::to_string(kMaxLines));
  if (value >> width)
    throw std::invalid_argument("pattern value " + std::to_string(value) +
                                " does not fit in " + std::to_string(width) + " lines");
}

std::string BitPattern::bits() const {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if (bit(i)) out[static_cast<std::size_t>(width - 1 - i)] = '1';
  return out;
}

int hamming(const BitPattern& p, const BitPattern& q) {
  if (p.width != q.width)
    throw std::invalid_argument("hamming distance of patterns with different widths (" +
                                std::to_string(p.width) + " vs " + std::to_string(q.width) + ")");
  return detail::hamming_raw(p.value, q.value);
}

std::string line_name(int line) {
  if (line < 0 || line >= kMaxLines) throw std::invalid_argument("line index out of range");
  return std::string(1, static_cast<char>('a' + line));
}

int parse_line_name(std::string_view token, int width) {
  int line = -1;
  if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'z') {
    line = token[0] - 'a';
  } else if (token.size() >= 2 && token[0] == 'x') {
    int idx = 0;
    for (std::size_t i = 1; i < token.size(); ++i) {
      if (token[i] < '0' || token[i] > '9') throw ParseError("bad line name '" + std::string(token) + "'");
      idx = idx * 10 + (token[i] - '0');
    }
    line = idx - 1;  // x1 is line 0
  } else {
    throw ParseError("bad line name '" + std::string(token) + "'");
  }
  if (line < 0 || line >= width)
    throw ParseError("line '" + std::string(token) + "' is outside the circuit width");
  return line;
}

}  // namespace revsynth
