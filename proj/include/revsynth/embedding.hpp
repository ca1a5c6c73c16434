#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "revsynth/spec.hpp"

namespace revsynth {

// A totally specified n-input k-output truth table, row r holding the k-bit
// output pattern for input value r.
class IrreversibleTable {
 public:
  IrreversibleTable(int inputs, int outputs, std::vector<std::uint32_t> rows);

  int inputs() const { return n_; }
  int outputs() const { return k_; }
  std::uint32_t row_count() const { return 1u << n_; }
  std::uint32_t row(std::uint32_t input) const { return rows_.at(input); }
  const std::vector<std::uint32_t>& rows() const { return rows_; }

  friend bool operator==(const IrreversibleTable&, const IrreversibleTable&) = default;

 private:
  int n_;
  int k_;
  std::vector<std::uint32_t> rows_;
};

struct EmbeddingResult {
  ReversibleSpec spec;                 // width max(n, p + k)
  std::uint32_t max_multiplicity = 0;  // m
  int garbage_lines = 0;               // p = ceil(log2 m)
  std::vector<int> constant_lines;     // added inputs fixed to 0
  std::vector<int> output_lines;       // line carrying output j at index j
  std::vector<int> passthrough_lines;  // output equals the same input line on
                                       // constant-0 rows
};

// Largest number of times any single output pattern appears.
std::uint32_t output_multiplicity(const IrreversibleTable& table);

// Minimum garbage-output count ceil(log2 m); 0 when the table is injective.
// Throws on m = 0.
int garbage_bound(std::uint32_t m);

// Expands the table into a reversible specification with the minimum garbage
// bound. When p + k exceeds n, p + k - n constant-0 lines are added at the
// top and the k outputs land on lines p..p+k-1; otherwise no lines are added
// and the outputs land on the top k lines. Rows the rules leave open are
// completed in ascending input order with the smallest unused pattern.
EmbeddingResult embed(const IrreversibleTable& table);

// .itable text format:
//   inputs <n>
//   outputs <k>
//   <2^n rows of k-bit output patterns, most significant output bit first>
// with '#' comment lines.
IrreversibleTable parse_table(std::istream& in);
IrreversibleTable parse_table(const std::string& text);
std::string format_table(const IrreversibleTable& table);
IrreversibleTable load_table(const std::filesystem::path& path);

}  // namespace revsynth
