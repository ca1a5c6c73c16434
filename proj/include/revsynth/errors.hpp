#pragma once

#include <stdexcept>
#include <string>

namespace revsynth {

// Raised when a text input (.rspec, .circ, .itable, gate syntax) is malformed.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_ = 0;
};

}  // namespace revsynth
