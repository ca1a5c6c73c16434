#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "revsynth/bit_pattern.hpp"

namespace revsynth {

// A reversible function on n lines, stored as a permutation of {0..2^n-1}
// indexed by input value. Bijectivity is checked at construction; all
// operations may assume it afterwards. Immutable.
class ReversibleSpec {
 public:
  ReversibleSpec(int lines, std::vector<std::uint32_t> perm);

  static ReversibleSpec identity(int lines);

  int lines() const { return n_; }
  std::uint32_t rows() const { return 1u << n_; }
  std::uint32_t apply(std::uint32_t input) const;
  const std::vector<std::uint32_t>& table() const { return perm_; }

  friend bool operator==(const ReversibleSpec&, const ReversibleSpec&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> perm_;
};

// Sum of hamming(i, f(i)) over all rows; 0 exactly for the identity.
long long complexity(const ReversibleSpec& spec);

// g with g[f(i)] = i for all i.
ReversibleSpec inverse(const ReversibleSpec& spec);

bool is_identity(const ReversibleSpec& spec);

// .rspec text format:
//   n <lines>
//   perm <2^n space-separated integers>
// with '#' comment lines.
ReversibleSpec parse_spec(std::istream& in);
ReversibleSpec parse_spec(const std::string& text);
std::string format_spec(const ReversibleSpec& spec);
ReversibleSpec load_spec(const std::filesystem::path& path);
void save_spec(const ReversibleSpec& spec, const std::filesystem::path& path);

}  // namespace revsynth
