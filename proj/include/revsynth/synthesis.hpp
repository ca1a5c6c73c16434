#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "revsynth/circuit.hpp"
#include "revsynth/spec.hpp"

namespace revsynth {

// How the next string to place is selected.
//   ascending    - occupant of the lowest misplaced slot (BSSSN)
//   lowest_value - misplaced string with the smallest integer value (variant)
//   random_pick  - uniform over misplaced strings, seeded generator
enum class Strategy { ascending, lowest_value, random_pick };

// Neighbour choice when several routing candidates tie on distance. The
// default follows the algorithm text (lowest integer value); `high` selects
// the highest value instead, which reproduces some published routings.
enum class TieBreak { low, high };

// output_translation sorts the output column directly; input_translation runs
// the sort on the inverse specification, so the emitted list realizes the
// original function in listed order.
enum class Direction { output_translation, input_translation };

// full emits every swap with all width-1 controls. min_complexity searches,
// per emitted gate, the control subsets that keep every currently-placed
// string fixed and picks the one minimizing the complexity C(f) of the
// working column; a single such gate can place several strings at once. The
// search is exhaustive over subsets, so it is intended for small line counts.
enum class ControlPolicy { full, min_complexity };

struct SynthesisOptions {
  Strategy strategy = Strategy::ascending;
  TieBreak tie_break = TieBreak::low;
  Direction direction = Direction::output_translation;
  ControlPolicy controls = ControlPolicy::full;
  std::uint64_t seed = 0;  // random_pick only; trial t runs with seed + t
  int trials = 1;          // random_pick only; best (fewest gates) run wins
};

struct PlacementStep {
  std::uint32_t placed_value;
  int route_gates;  // gates emitted for this placement, unwinds included
};

struct SynthesisReport {
  Circuit circuit;
  std::size_t swap_count = 0;       // equals circuit.size()
  std::size_t reverse_op_count = 0; // displaced in-place strings, later unwound
  std::vector<PlacementStep> trace;
};

// Sorts the specification by distance-1 swaps, one gate per swap. The emitted
// circuit realizes the requested function under reversed order
// (output_translation) or listed order (input_translation).
SynthesisReport synthesize(const ReversibleSpec& spec, const SynthesisOptions& options = {});

// The width patterns at Hamming distance 1 from b, ascending by flipped bit.
std::vector<BitPattern> neighbor_candidates(const BitPattern& b);

// The unique full-control gate exchanging two patterns at Hamming distance 1:
// target = the differing bit, every other line a control with p's polarity.
ToffoliGate swap_gate(const BitPattern& p, const BitPattern& q);

// Greedy control deletion: for each gate in order and each control (ascending
// line, positive before negative), drop the control iff the whole circuit
// still realizes `spec` under reversed order. Throws if the input circuit
// does not realize `spec` to begin with.
Circuit reduce_controls(const Circuit& circuit, const ReversibleSpec& spec);

std::string to_string(Strategy s);
Strategy strategy_from_string(std::string_view name);

}  // namespace revsynth
