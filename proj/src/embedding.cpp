#include "revsynth/embedding.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "revsynth/errors.hpp"
#include "revsynth/io_detail.hpp"

namespace revsynth {

namespace {
constexpr std::uint32_t kUnassigned = 0xFFFFFFFFu;
}

IrreversibleTable::IrreversibleTable(int inputs, int outputs, std::vector<std::uint32_t> rows)
    : n_(inputs), k_(outputs), rows_(std::move(rows)) {
  if (n_ < 1 || n_ > kMaxLines)
    throw std::invalid_argument("input count must be between 1 and " + std::to_string(kMaxLines));
  if (k_ < 1 || k_ > kMaxLines)
    throw std::invalid_argument("output count must be between 1 and " + std::to_string(kMaxLines));
  const std::size_t expected = std::size_t(1) << n_;
  if (rows_.size() != expected)
    throw std::invalid_argument("table has " + std::to_string(rows_.size()) +
                                " rows, expected " + std::to_string(expected));
  for (std::uint32_t r : rows_)
    if (r >> k_)
      throw std::invalid_argument("row value " + std::to_string(r) + " does not fit in " +
                                  std::to_string(k_) + " outputs");
}

std::uint32_t output_multiplicity(const IrreversibleTable& table) {
  std::vector<std::uint32_t> count(std::size_t(1) << table.outputs(), 0);
  std::uint32_t m = 0;
  for (std::uint32_t r : table.rows()) m = std::max(m, ++count[r]);
  return m;
}

int garbage_bound(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("output multiplicity cannot be zero");
  if (m == 1) return 0;
  return std::bit_width(m - 1);
}

EmbeddingResult embed(const IrreversibleTable& table) {
  const int n = table.inputs();
  const int k = table.outputs();
  const std::uint32_t m = output_multiplicity(table);
  const int p = garbage_bound(m);
  const int width = std::max(n, p + k);
  if (width > kMaxLines)
    throw std::invalid_argument("embedding needs " + std::to_string(width) +
                                " lines, more than the limit of " + std::to_string(kMaxLines));

  const std::size_t rows = std::size_t(1) << width;
  std::vector<std::uint32_t> out(rows, kUnassigned);
  std::vector<bool> used(rows, false);
  const int fbase = (p + k > n) ? p : n - k;

  const auto assign = [&](std::uint32_t input, std::uint32_t value) {
    out[input] = value;
    used[value] = true;
  };

  if (p + k > n && k == 1) {
    // Single output: the new top line carries f xor that line, which settles
    // every row at once. Here p == n, so the function lands on line n.
    for (std::uint32_t input = 0; input < rows; ++input) {
      const std::uint32_t row = input & ((1u << n) - 1);
      const std::uint32_t hi = (input >> n) & 1u;
      assign(input, row | ((table.row(row) ^ hi) << fbase));
    }
  } else {
    // The rules determine the constant-0 rows: the k outputs on lines
    // fbase.., the lowest fbase original inputs passed through underneath.
    // A collision on those low bits is repaired with the smallest garbage
    // pattern that keeps the output lines intact.
    const std::uint32_t gmask = (1u << fbase) - 1;
    for (std::uint32_t row = 0; row < (1u << n); ++row) {
      const std::uint32_t fbits = table.row(row) << fbase;
      const std::uint32_t preferred = (row & gmask) | fbits;
      if (!used[preferred]) {
        assign(row, preferred);
        continue;
      }
      bool repaired = false;
      for (std::uint32_t g = 0; g <= gmask; ++g) {
        if (!used[g | fbits]) {
          assign(row, g | fbits);
          repaired = true;
          break;
        }
      }
      if (!repaired)
        throw std::invalid_argument(
            "embedding conflict: output pattern " + std::to_string(table.row(row)) +
            " occurs more often than the garbage lines can distinguish");
    }
    // Remaining rows are free; complete in ascending order with the smallest
    // unused pattern.
    std::uint32_t next = 0;
    for (std::uint32_t input = 0; input < rows; ++input) {
      if (out[input] != kUnassigned) continue;
      while (used[next]) ++next;
      assign(input, next);
    }
  }

  EmbeddingResult result{ReversibleSpec(width, std::move(out)), m, p, {}, {}, {}};
  for (int line = n; line < width; ++line) result.constant_lines.push_back(line);
  for (int j = 0; j < k; ++j) result.output_lines.push_back(fbase + j);
  const auto& spec_table = result.spec.table();
  for (int line = 0; line < width; ++line) {
    if (line >= fbase && line < fbase + k) continue;
    bool pass = true;
    for (std::uint32_t row = 0; row < (1u << n) && pass; ++row)
      pass = ((spec_table[row] >> line) & 1u) == ((row >> line) & 1u);
    if (pass && line < n) result.passthrough_lines.push_back(line);
  }
  return result;
}

IrreversibleTable parse_table(std::istream& in) {
  int n = -1, k = -1;
  std::vector<std::uint32_t> rows;

  detail::for_each_data_line(in, [&](const std::string& line, int lineno) {
    std::istringstream fields(line);
    std::string key;
    if (n == -1 || k == -1) {
      fields >> key;
      if (key == "inputs" && n == -1) {
        if (!(fields >> n)) throw ParseError("expected an integer after 'inputs'", lineno);
      } else if (key == "outputs" && n != -1 && k == -1) {
        if (!(fields >> k)) throw ParseError("expected an integer after 'outputs'", lineno);
      } else {
        throw ParseError("expected 'inputs <n>' then 'outputs <k>'", lineno);
      }
      return;
    }
    std::string bits;
    while (fields >> bits) {
      if (bits.size() != static_cast<std::size_t>(k))
        throw ParseError("row '" + bits + "' is not " + std::to_string(k) + " bits wide", lineno);
      std::uint32_t value = 0;
      for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("row '" + bits + "' is not binary", lineno);
        value = (value << 1) | static_cast<std::uint32_t>(c - '0');
      }
      rows.push_back(value);
    }
  });

  if (n == -1) throw ParseError("missing 'inputs' line");
  if (k == -1) throw ParseError("missing 'outputs' line");
  try {
    return IrreversibleTable(n, k, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

IrreversibleTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

std::string format_table(const IrreversibleTable& table) {
  std::ostringstream out;
  out << "inputs " << table.inputs() << "\noutputs " << table.outputs() << '\n';
  for (std::uint32_t r : table.rows()) {
    for (int bit = table.outputs() - 1; bit >= 0; --bit) out << ((r >> bit) & 1u);
    out << '\n';
  }
  return out.str();
}

IrreversibleTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return parse_table(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace revsynth
