#include "revsynth/spec.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "revsynth/errors.hpp"
#include "revsynth/io_detail.hpp"

namespace revsynth {

ReversibleSpec::ReversibleSpec(int lines, std::vector<std::uint32_t> perm)
    : n_(lines), perm_(std::move(perm)) {
  if (n_ < 1 || n_ > kMaxLines)
    throw std::invalid_argument("line count must be between 1 and " + std::to_string(kMaxLines));
  const std::size_t rows = std::size_t(1) << n_;
  if (perm_.size() != rows)
    throw std::invalid_argument("permutation has " + std::to_string(perm_.size()) +
                                " entries, expected " + std::to_string(rows));
  std::vector<bool> seen(rows, false);
  for (std::uint32_t v : perm_) {
    if (v >= rows)
      throw std::invalid_argument("permutation value " + std::to_string(v) +
                                  " is out of range for " + std::to_string(n_) + " lines");
    if (seen[v])
      throw std::invalid_argument("not a bijection: value " + std::to_string(v) +
                                  " appears more than once");
    seen[v] = true;
  }
}

ReversibleSpec ReversibleSpec::identity(int lines) {
  if (lines < 1 || lines > kMaxLines)
    throw std::invalid_argument("line count must be between 1 and " + std::to_string(kMaxLines));
  std::vector<std::uint32_t> perm(std::size_t(1) << lines);
  std::iota(perm.begin(), perm.end(), 0u);
  return ReversibleSpec(lines, std::move(perm));
}

std::uint32_t ReversibleSpec::apply(std::uint32_t input) const {
  if (input >= perm_.size()) throw std::invalid_argument("input row out of range");
  return perm_[input];
}

long long complexity(const ReversibleSpec& spec) {
  long long sum = 0;
  const auto& t = spec.table();
  for (std::uint32_t i = 0; i < t.size(); ++i) sum += detail::hamming_raw(i, t[i]);
  return sum;
}

ReversibleSpec inverse(const ReversibleSpec& spec) {
  std::vector<std::uint32_t> inv(spec.rows());
  const auto& t = spec.table();
  for (std::uint32_t i = 0; i < t.size(); ++i) inv[t[i]] = i;
  return ReversibleSpec(spec.lines(), std::move(inv));
}

bool is_identity(const ReversibleSpec& spec) {
  const auto& t = spec.table();
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (t[i] != i) return false;
  return true;
}

ReversibleSpec parse_spec(std::istream& in) {
  int n = -1;
  std::vector<std::uint32_t> perm;
  bool have_perm = false;

  detail::for_each_data_line(in, [&](const std::string& line, int lineno) {
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    if (key == "n") {
      if (n != -1) throw ParseError("duplicate 'n' line", lineno);
      if (!(fields >> n)) throw ParseError("expected an integer after 'n'", lineno);
    } else if (key == "perm") {
      if (n == -1) throw ParseError("'perm' before 'n'", lineno);
      if (have_perm) throw ParseError("duplicate 'perm' line", lineno);
      long long v;
      while (fields >> v) {
        if (v < 0) throw ParseError("negative permutation value", lineno);
        perm.push_back(static_cast<std::uint32_t>(v));
      }
      if (!fields.eof()) throw ParseError("bad permutation entry", lineno);
      have_perm = true;
    } else {
      throw ParseError("unexpected line '" + line + "'", lineno);
    }
  });

  if (n == -1) throw ParseError("missing 'n' line");
  if (!have_perm) throw ParseError("missing 'perm' line");
  try {
    return ReversibleSpec(n, std::move(perm));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

ReversibleSpec parse_spec(const std::string& text) {
  std::istringstream in(text);
  return parse_spec(in);
}

std::string format_spec(const ReversibleSpec& spec) {
  std::ostringstream out;
  out << "n " << spec.lines() << "\nperm";
  for (std::uint32_t v : spec.table()) out << ' ' << v;
  out << '\n';
  return out.str();
}

ReversibleSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return parse_spec(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_spec(const ReversibleSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_spec(spec);
}

}  // namespace revsynth
