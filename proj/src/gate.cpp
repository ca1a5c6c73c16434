#include "revsynth/gate.hpp"

#include <stdexcept>
#include <vector>

#include "revsynth/errors.hpp"

namespace revsynth {

ToffoliGate::ToffoliGate(int width, int target, std::uint32_t positive, std::uint32_t negative)
    : width_(width), target_(target), pos_(positive), neg_(negative) {
  if (width_ < 1 || width_ > kMaxLines)
    throw std::invalid_argument("gate width must be between 1 and " + std::to_string(kMaxLines));
  if (target_ < 0 || target_ >= width_)
    throw std::invalid_argument("gate target " + std::to_string(target_) + " out of range");
  const std::uint32_t line_mask = (width_ == 32) ? ~0u : (1u << width_) - 1;
  if ((pos_ | neg_) & ~line_mask)
    throw std::invalid_argument("control mask references a line outside the gate width");
  if (pos_ & neg_) throw std::invalid_argument("a control line cannot carry both polarities");
  if ((pos_ | neg_) & target_bit())
    throw std::invalid_argument("the target line cannot also be a control");
}

int ToffoliGate::control_count() const { return std::popcount(pos_ | neg_); }

BitPattern ToffoliGate::apply(const BitPattern& p) const {
  if (p.width != width_)
    throw std::invalid_argument("pattern width " + std::to_string(p.width) +
                                " does not match gate width " + std::to_string(width_));
  return BitPattern(apply(p.value), p.width);
}

std::uint64_t ToffoliGate::moved_points() const {
  return std::uint64_t(1) << (width_ - control_count());
}

std::string ToffoliGate::text() const {
  std::string out = "T(";
  bool first = true;
  for (int line = 0; line < width_; ++line) {
    const std::uint32_t bit = 1u << line;
    if (!((pos_ | neg_) & bit)) continue;
    if (!first) out += ',';
    out += line_name(line);
    if (neg_ & bit) out += '\'';
    first = false;
  }
  out += ':';
  out += line_name(target_);
  out += ')';
  return out;
}

namespace {

// Accepts an ASCII apostrophe or the prime character U+2032 as the negative
// polarity mark.
bool eat_prime(std::string_view& s) {
  if (!s.empty() && s.front() == '\'') {
    s.remove_prefix(1);
    return true;
  }
  if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xE2 &&
      static_cast<unsigned char>(s[1]) == 0x80 && static_cast<unsigned char>(s[2]) == 0xB2) {
    s.remove_prefix(3);
    return true;
  }
  return false;
}

std::string_view strip_ws(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string_view take_name(std::string_view& s) {
  std::size_t len = 0;
  while (len < s.size() && ((s[len] >= 'a' && s[len] <= 'z') || (s[len] >= '0' && s[len] <= '9')))
    ++len;
  std::string_view name = s.substr(0, len);
  s.remove_prefix(len);
  return name;
}

}  // namespace

ToffoliGate ToffoliGate::parse(std::string_view text, int width) {
  std::string_view s = strip_ws(text);
  if (s.size() < 4 || s.front() != 'T') throw ParseError("gate must start with 'T(': '" + std::string(text) + "'");
  s.remove_prefix(1);
  s = strip_ws(s);
  if (s.empty() || s.front() != '(') throw ParseError("expected '(' in gate '" + std::string(text) + "'");
  s.remove_prefix(1);
  if (s.empty() || s.back() != ')') throw ParseError("expected ')' in gate '" + std::string(text) + "'");
  s.remove_suffix(1);

  const std::size_t colon = s.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("expected ':' before the target in gate '" + std::string(text) + "'");
  std::string_view controls = s.substr(0, colon);
  std::string_view target_tok = strip_ws(s.substr(colon + 1));

  std::uint32_t pos = 0, neg = 0;
  controls = strip_ws(controls);
  while (!controls.empty()) {
    std::string_view item = controls;
    const std::size_t comma = controls.find(',');
    if (comma != std::string_view::npos) {
      item = controls.substr(0, comma);
      controls = strip_ws(controls.substr(comma + 1));
      if (controls.empty()) throw ParseError("trailing comma in gate '" + std::string(text) + "'");
    } else {
      controls = {};
    }
    item = strip_ws(item);
    std::string_view name = take_name(item);
    if (name.empty()) throw ParseError("empty control in gate '" + std::string(text) + "'");
    const bool negative = eat_prime(item);
    if (!strip_ws(item).empty()) throw ParseError("bad control token in gate '" + std::string(text) + "'");
    const int line = parse_line_name(name, width);
    const std::uint32_t bit = 1u << line;
    if ((pos | neg) & bit)
      throw ParseError("control line '" + std::string(name) + "' repeated in gate '" +
                       std::string(text) + "'");
    (negative ? neg : pos) |= bit;
  }

  if (target_tok.empty()) throw ParseError("missing target in gate '" + std::string(text) + "'");
  const int target = parse_line_name(target_tok, width);
  try {
    return ToffoliGate(width, target, pos, neg);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in gate '" + std::string(text) + "'");
  }
}

}  // namespace revsynth
