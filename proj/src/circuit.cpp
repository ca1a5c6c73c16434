#include "revsynth/circuit.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "revsynth/errors.hpp"
#include "revsynth/io_detail.hpp"

namespace revsynth {

std::string to_string(GateOrder order) {
  return order == GateOrder::listed ? "listed" : "reversed";
}

GateOrder order_from_string(std::string_view name) {
  if (name == "listed") return GateOrder::listed;
  if (name == "reversed") return GateOrder::reversed;
  throw ParseError("unknown gate order '" + std::string(name) + "'");
}

Circuit::Circuit(int width) : width_(width) {
  if (width_ < 1 || width_ > kMaxLines)
    throw std::invalid_argument("circuit width must be between 1 and " +
                                std::to_string(kMaxLines));
}

Circuit::Circuit(int width, std::vector<ToffoliGate> gates) : Circuit(width) {
  gates_.reserve(gates.size());
  for (const auto& g : gates) append(g);
}

void Circuit::append(const ToffoliGate& gate) {
  if (gate.width() != width_)
    throw std::invalid_argument("gate width " + std::to_string(gate.width()) +
                                " does not match circuit width " + std::to_string(width_));
  gates_.push_back(gate);
}

std::uint32_t Circuit::apply(std::uint32_t pattern, GateOrder order) const {
  if (order == GateOrder::listed) {
    for (const auto& g : gates_) pattern = g.apply(pattern);
  } else {
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) pattern = it->apply(pattern);
  }
  return pattern;
}

BitPattern Circuit::apply(const BitPattern& pattern, GateOrder order) const {
  if (pattern.width != width_)
    throw std::invalid_argument("pattern width " + std::to_string(pattern.width) +
                                " does not match circuit width " + std::to_string(width_));
  return BitPattern(apply(pattern.value, order), width_);
}

ReversibleSpec Circuit::to_spec(GateOrder order) const {
  std::vector<std::uint32_t> perm(std::size_t(1) << width_);
  for (std::uint32_t p = 0; p < perm.size(); ++p) perm[p] = apply(p, order);
  return ReversibleSpec(width_, std::move(perm));
}

std::string Circuit::text() const {
  std::string out;
  for (const auto& g : gates_) {
    if (!out.empty()) out += ' ';
    out += g.text();
  }
  return out;
}

bool equivalent(const Circuit& a, const Circuit& b) {
  if (a.width() != b.width())
    throw std::invalid_argument("cannot compare circuits of widths " +
                                std::to_string(a.width()) + " and " + std::to_string(b.width()));
  const std::uint32_t rows = 1u << a.width();
  for (std::uint32_t p = 0; p < rows; ++p)
    if (a.apply(p, GateOrder::listed) != b.apply(p, GateOrder::listed)) return false;
  return true;
}

bool realizes(const Circuit& circuit, const ReversibleSpec& spec, GateOrder order) {
  if (circuit.width() != spec.lines()) return false;
  const auto& table = spec.table();
  for (std::uint32_t p = 0; p < table.size(); ++p)
    if (circuit.apply(p, order) != table[p]) return false;
  return true;
}

std::size_t total_controls(const Circuit& circuit) {
  std::size_t sum = 0;
  for (const auto& g : circuit.gates()) sum += static_cast<std::size_t>(g.control_count());
  return sum;
}

namespace {

// Splits a line into gate chunks "T(...)", tolerating whitespace inside.
std::vector<std::string> gate_chunks(const std::string& line, int lineno) {
  std::vector<std::string> chunks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    if (line[i] != 'T') throw ParseError("expected a gate, found '" + line.substr(i) + "'", lineno);
    const std::size_t close = line.find(')', i);
    if (close == std::string::npos) throw ParseError("unterminated gate", lineno);
    chunks.push_back(line.substr(i, close - i + 1));
    i = close + 1;
  }
  return chunks;
}

}  // namespace

Circuit parse_circuit(std::istream& in, std::optional<GateOrder>* annotation) {
  if (annotation) annotation->reset();
  int width = -1;
  std::vector<ToffoliGate> gates;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view rest = detail::trim(line.substr(1));
      if (rest.rfind("order:", 0) == 0 && annotation)
        *annotation = order_from_string(detail::trim(rest.substr(6)));
      continue;
    }
    if (width == -1) {
      std::istringstream fields{std::string(line)};
      std::string key;
      fields >> key;
      if (key != "n" || !(fields >> width))
        throw ParseError("expected 'n <lines>' as the first line", lineno);
      if (width < 1 || width > kMaxLines) throw ParseError("bad line count", lineno);
      continue;
    }
    for (const auto& chunk : gate_chunks(std::string(line), lineno)) {
      try {
        gates.push_back(ToffoliGate::parse(chunk, width));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
    }
  }
  if (width == -1) throw ParseError("missing 'n' line");
  return Circuit(width, std::move(gates));
}

Circuit parse_circuit(const std::string& text, std::optional<GateOrder>* annotation) {
  std::istringstream in(text);
  return parse_circuit(in, annotation);
}

std::string format_circuit(const Circuit& circuit, std::optional<GateOrder> annotation) {
  std::ostringstream out;
  out << "n " << circuit.width() << '\n';
  for (const auto& g : circuit.gates()) out << g.text() << '\n';
  if (annotation) out << "# order: " << to_string(*annotation) << '\n';
  return out.str();
}

Circuit load_circuit(const std::filesystem::path& path, std::optional<GateOrder>* annotation) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return parse_circuit(in, annotation);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_circuit(const Circuit& circuit, const std::filesystem::path& path,
                  std::optional<GateOrder> annotation) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_circuit(circuit, annotation);
}

}  // namespace revsynth
