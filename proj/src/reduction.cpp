#include "revsynth/reduction.hpp"

#include <bit>
#include <stdexcept>

namespace revsynth {

namespace {

// Property check between two identical gates: nothing in between may touch
// the pair's target with a control or target one of the pair's control lines.
bool pair_clear(const std::vector<ToffoliGate>& gates, std::size_t i, std::size_t j) {
  const std::uint32_t tbit = 1u << gates[i].target();
  const std::uint32_t ctrls = gates[i].control_lines();
  for (std::size_t k = i + 1; k < j; ++k) {
    if (gates[k].control_lines() & tbit) return false;
    if (ctrls & (1u << gates[k].target())) return false;
  }
  return true;
}

}  // namespace

bool removable_pair(const Circuit& circuit, std::size_t i, std::size_t j) {
  if (i >= circuit.size() || j >= circuit.size())
    throw std::out_of_range("gate index out of range");
  if (i >= j) throw std::invalid_argument("pair indices must satisfy i < j");
  if (!(circuit.gate(i) == circuit.gate(j)))
    throw std::invalid_argument("gates at the given indices are not identical");
  return pair_clear(circuit.gates(), i, j);
}

Circuit remove_useless_pairs(const Circuit& circuit, ReduceStats* stats) {
  std::vector<ToffoliGate> gates = circuit.gates();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < gates.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < gates.size(); ++j) {
        if (gates[i] == gates[j] && pair_clear(gates, i, j)) {
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
          if (stats) ++stats->pairs_removed;
          changed = true;
          break;
        }
      }
    }
  }
  return Circuit(circuit.width(), std::move(gates));
}

const std::vector<RewriteRule>& template_rules() {
  static const std::vector<RewriteRule> rules{
      {"pair_cancel", 2,
       [](std::span<const ToffoliGate> g) -> std::optional<std::vector<ToffoliGate>> {
         if (g[0] == g[1]) return std::vector<ToffoliGate>{};
         return std::nullopt;
       }},
      {"not_pushthrough", 3,
       [](std::span<const ToffoliGate> g) -> std::optional<std::vector<ToffoliGate>> {
         // T(x:y) T(:x) T(:y) -> T(:x) T(x:y)
         const ToffoliGate& head = g[0];
         if (head.negative() != 0 || std::popcount(head.positive()) != 1) return std::nullopt;
         const int x = std::countr_zero(head.positive());
         const int y = head.target();
         const int w = head.width();
         const ToffoliGate not_x(w, x, 0, 0), not_y(w, y, 0, 0);
         if (!(g[1] == not_x) || !(g[2] == not_y)) return std::nullopt;
         return std::vector<ToffoliGate>{not_x, head};
       }},
      {"polarity_merge", 2,
       [](std::span<const ToffoliGate> g) -> std::optional<std::vector<ToffoliGate>> {
         // T(b,c:a) T(b',c:a) -> T(c:a): the pair partitions on one control
         if (g[0].target() != g[1].target()) return std::nullopt;
         if (g[0].control_lines() != g[1].control_lines()) return std::nullopt;
         const std::uint32_t flip = g[0].positive() ^ g[1].positive();
         if (std::popcount(flip) != 1) return std::nullopt;
         return std::vector<ToffoliGate>{ToffoliGate(g[0].width(), g[0].target(),
                                                     g[0].positive() & ~flip,
                                                     g[0].negative() & ~flip)};
       }},
  };
  return rules;
}

Circuit apply_templates(const Circuit& circuit, ReduceStats* stats) {
  std::vector<ToffoliGate> gates = circuit.gates();
  const auto& rules = template_rules();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : rules) {
      if (gates.size() < rule.window) continue;
      for (std::size_t at = 0; at + rule.window <= gates.size(); ++at) {
        auto replacement = rule.apply(std::span<const ToffoliGate>(gates).subspan(at, rule.window));
        if (!replacement) continue;
        const auto it = gates.begin() + static_cast<std::ptrdiff_t>(at);
        gates.erase(it, it + static_cast<std::ptrdiff_t>(rule.window));
        gates.insert(gates.begin() + static_cast<std::ptrdiff_t>(at), replacement->begin(),
                     replacement->end());
        if (stats) ++stats->template_rewrites;
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return Circuit(circuit.width(), std::move(gates));
}

Circuit reduce(const Circuit& circuit, ReduceStats* stats) {
  Circuit current = circuit;
  for (;;) {
    Circuit next = apply_templates(remove_useless_pairs(current, stats), stats);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace revsynth
