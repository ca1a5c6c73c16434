#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "revsynth/gate.hpp"
#include "revsynth/spec.hpp"

namespace revsynth {

// Application order for a gate list. Synthesis sorts the output column, so an
// emitted list realizes its target function when applied in `reversed` order
// and the inverse function when applied in `listed` order. Palindromic
// circuits realize the same function either way.
enum class GateOrder { listed, reversed };

std::string to_string(GateOrder order);
GateOrder order_from_string(std::string_view name);

// An ordered gate sequence over a fixed number of lines.
class Circuit {
 public:
  explicit Circuit(int width);
  Circuit(int width, std::vector<ToffoliGate> gates);

  void append(const ToffoliGate& gate);  // width-checked

  int width() const { return width_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<ToffoliGate>& gates() const { return gates_; }
  const ToffoliGate& gate(std::size_t i) const { return gates_.at(i); }

  std::uint32_t apply(std::uint32_t pattern, GateOrder order) const;
  BitPattern apply(const BitPattern& pattern, GateOrder order) const;

  // Simulates every row 0..2^width-1; the result is always a bijection.
  ReversibleSpec to_spec(GateOrder order) const;

  // Single-line rendering: gates separated by one space.
  std::string text() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int width_;
  std::vector<ToffoliGate> gates_;
};

// Exhaustive-simulation equivalence under listed order. Throws on width
// mismatch.
bool equivalent(const Circuit& a, const Circuit& b);

// True iff the circuit realizes `spec` when applied in the given order.
bool realizes(const Circuit& circuit, const ReversibleSpec& spec, GateOrder order);

std::size_t total_controls(const Circuit& circuit);

// .circ text format:
//   n <lines>
//   <one gate per line>
// with '#' comment lines. A "# order: listed|reversed" comment records the
// direction under which the file realizes its function.
Circuit parse_circuit(std::istream& in, std::optional<GateOrder>* annotation = nullptr);
Circuit parse_circuit(const std::string& text, std::optional<GateOrder>* annotation = nullptr);
std::string format_circuit(const Circuit& circuit,
                           std::optional<GateOrder> annotation = std::nullopt);
Circuit load_circuit(const std::filesystem::path& path,
                     std::optional<GateOrder>* annotation = nullptr);
void save_circuit(const Circuit& circuit, const std::filesystem::path& path,
                  std::optional<GateOrder> annotation = std::nullopt);

}  // namespace revsynth
