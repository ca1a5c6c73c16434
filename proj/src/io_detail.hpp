#pragma once

#include <istream>
#include <string>
#include <string_view>

namespace revsynth::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Calls fn(line, lineno) for every non-blank, non-comment line.
template <typename Fn>
void for_each_data_line(std::istream& in, Fn fn) {
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    fn(std::string(line), lineno);
  }
}

}  // namespace revsynth::detail
