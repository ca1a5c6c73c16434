#include "revsynth/synthesis.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "revsynth/errors.hpp"
#include "revsynth/rng.hpp"

namespace revsynth {

namespace {

using detail::hamming_raw;

ToffoliGate swap_gate_raw(std::uint32_t p, std::uint32_t q, int width) {
  const std::uint32_t diff = p ^ q;
  const int target = std::countr_zero(diff);
  const std::uint32_t tbit = 1u << target;
  const std::uint32_t line_mask = (1u << width) - 1;
  return ToffoliGate(width, target, p & ~tbit & line_mask, ~p & ~tbit & line_mask);
}

// The output column being sorted, with the inverse position index, the
// misplaced count and the running complexity kept in step with every gate.
struct Working {
  int n;
  std::uint32_t line_mask;
  std::vector<std::uint32_t> slot;  // slot[i] = value currently at slot i
  std::vector<std::uint32_t> pos;   // pos[v] = slot currently holding value v
  std::uint32_t misplaced = 0;
  long long cf = 0;

  Working(const std::vector<std::uint32_t>& table, int lines)
      : n(lines), line_mask((1u << lines) - 1), slot(table), pos(table.size()) {
    for (std::uint32_t i = 0; i < slot.size(); ++i) {
      pos[slot[i]] = i;
      if (slot[i] != i) ++misplaced;
      cf += hamming_raw(i, slot[i]);
    }
  }

  bool in_place(std::uint32_t v) const { return pos[v] == v; }

  void swap_values(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t sa = pos[a], sb = pos[b];
    cf -= hamming_raw(sa, a) + hamming_raw(sb, b);
    misplaced -= (sa == a) + (sb == b);
    slot[sa] = b;
    slot[sb] = a;
    pos[a] = sb;
    pos[b] = sa;
    cf += hamming_raw(sa, b) + hamming_raw(sb, a);
    misplaced += (sb == a) + (sa == b);
  }

  // Applies the gate to every value of the column, pair by pair.
  void apply(const ToffoliGate& g) {
    const std::uint32_t tbit = 1u << g.target();
    const std::uint32_t free = line_mask & ~g.control_lines() & ~tbit;
    std::uint32_t f = free;
    for (;;) {
      const std::uint32_t low = g.positive() | f;
      swap_values(low, low | tbit);
      if (f == 0) break;
      f = (f - 1) & free;
    }
  }
};

bool pick_value_to_place(const Working& w, Strategy strategy, Lcg64& rng, std::uint32_t* out) {
  if (w.misplaced == 0) return false;
  switch (strategy) {
    case Strategy::ascending:
      for (std::uint32_t i = 0; i < w.slot.size(); ++i)
        if (w.slot[i] != i) {
          *out = w.slot[i];
          return true;
        }
      return false;
    case Strategy::lowest_value:
      for (std::uint32_t v = 0; v < w.slot.size(); ++v)
        if (!w.in_place(v)) {
          *out = v;
          return true;
        }
      return false;
    case Strategy::random_pick: {
      std::vector<std::uint32_t> pool;
      pool.reserve(w.misplaced);
      for (std::uint32_t v = 0; v < w.slot.size(); ++v)
        if (!w.in_place(v)) pool.push_back(v);
      *out = pool[rng.below(pool.size())];
      return true;
    }
  }
  return false;
}

// Among the neighbours of b, the ones closest to a; misplaced candidates are
// preferred, remaining ties go to the lowest (or highest) integer value.
std::uint32_t pick_neighbor(const Working& w, std::uint32_t a, std::uint32_t b, TieBreak tie) {
  std::uint32_t cands[kMaxLines];
  int count = 0;
  int best = std::numeric_limits<int>::max();
  for (int bit = 0; bit < w.n; ++bit) {
    const std::uint32_t c = b ^ (1u << bit);
    const int d = hamming_raw(a, c);
    if (d < best) {
      best = d;
      count = 0;
    }
    if (d == best) cands[count++] = c;
  }
  std::uint32_t pool[kMaxLines];
  int pool_count = 0;
  for (int i = 0; i < count; ++i)
    if (!w.in_place(cands[i])) pool[pool_count++] = cands[i];
  const std::uint32_t* arr = pool_count ? pool : cands;
  const int arr_count = pool_count ? pool_count : count;
  std::uint32_t chosen = arr[0];
  for (int i = 1; i < arr_count; ++i)
    if (tie == TieBreak::low ? arr[i] < chosen : arr[i] > chosen) chosen = arr[i];
  return chosen;
}

// Control-subset search for the swap of p and q: keeps every subset gate that
// leaves all currently-placed values fixed and returns the one minimizing the
// column complexity. Ties prefer more controls, then the smaller mask pair.
// The full-control gate moves only p and q, so a candidate always exists.
ToffoliGate pick_min_complexity_gate(const Working& w, std::uint32_t p, std::uint32_t q) {
  const ToffoliGate full = swap_gate_raw(p, q, w.n);
  const std::uint32_t tbit = 1u << full.target();

  int lines[kMaxLines];
  int nlines = 0;
  for (int line = 0; line < w.n; ++line)
    if (full.control_lines() & (1u << line)) lines[nlines++] = line;

  struct Key {
    long long cf;
    int ctrls;
    std::uint32_t posm, negm;
    bool operator<(const Key& o) const {
      if (cf != o.cf) return cf < o.cf;
      if (ctrls != o.ctrls) return ctrls > o.ctrls;
      if (posm != o.posm) return posm < o.posm;
      return negm < o.negm;
    }
  };
  Key best_key{};
  std::uint32_t best_pos = full.positive(), best_neg = full.negative();
  bool have = false;

  for (std::uint32_t sub = 0; sub < (1u << nlines); ++sub) {
    std::uint32_t chosen = 0;
    for (int i = 0; i < nlines; ++i)
      if ((sub >> i) & 1u) chosen |= 1u << lines[i];
    const std::uint32_t posm = full.positive() & chosen;
    const std::uint32_t negm = full.negative() & chosen;
    const std::uint32_t free = w.line_mask & ~chosen & ~tbit;

    long long delta = 0;
    bool legal = true;
    std::uint32_t f = free;
    for (;;) {
      const std::uint32_t lo = posm | f;
      const std::uint32_t hi = lo | tbit;
      if (w.in_place(lo) || w.in_place(hi)) {
        legal = false;
        break;
      }
      const std::uint32_t slo = w.pos[lo], shi = w.pos[hi];
      delta += hamming_raw(slo, hi) + hamming_raw(shi, lo) - hamming_raw(slo, lo) -
               hamming_raw(shi, hi);
      if (f == 0) break;
      f = (f - 1) & free;
    }
    if (!legal) continue;
    const Key key{w.cf + delta, std::popcount(chosen), posm, negm};
    if (!have || key < best_key) {
      have = true;
      best_key = key;
      best_pos = posm;
      best_neg = negm;
    }
  }
  return ToffoliGate(w.n, full.target(), best_pos, best_neg);
}

SynthesisReport run_single(const ReversibleSpec& target, const SynthesisOptions& options,
                           std::uint64_t seed) {
  const int n = target.lines();
  Working w(target.table(), n);
  Lcg64 rng(seed);

  std::vector<ToffoliGate> emitted;
  std::vector<PlacementStep> trace;
  std::size_t reverse_ops = 0;

  // Subset gates are sound only while no displaced in-place string awaits its
  // unwind; once the undo stack is live the route sticks to full controls.
  const auto choose = [&](std::uint32_t p, std::uint32_t q, bool stack_empty) {
    if (options.controls == ControlPolicy::full || !stack_empty) return swap_gate_raw(p, q, n);
    return pick_min_complexity_gate(w, p, q);
  };
  const auto emit = [&](const ToffoliGate& g) {
    emitted.push_back(g);
    w.apply(g);
  };

  std::uint32_t a = 0;
  while (pick_value_to_place(w, options.strategy, rng, &a)) {
    int route = 0;
    std::vector<ToffoliGate> undo;
    for (;;) {
      const std::uint32_t b = w.slot[a];
      if (hamming_raw(a, b) == 1) {
        emit(choose(a, b, undo.empty()));
        ++route;
        break;
      }
      const std::uint32_t c = pick_neighbor(w, a, b, options.tie_break);
      const bool displaced = w.in_place(c);
      const ToffoliGate g = displaced ? swap_gate_raw(b, c, n) : choose(b, c, undo.empty());
      emit(g);
      ++route;
      if (displaced) {
        undo.push_back(g);
        ++reverse_ops;
      }
    }
    while (!undo.empty()) {  // LIFO unwind restores every displaced string
      emit(undo.back());
      undo.pop_back();
      ++route;
    }
    trace.push_back(PlacementStep{a, route});
  }

  SynthesisReport report{Circuit(n, std::move(emitted)), 0, reverse_ops, std::move(trace)};
  report.swap_count = report.circuit.size();
  return report;
}

}  // namespace

SynthesisReport synthesize(const ReversibleSpec& spec, const SynthesisOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be at least 1");
  const ReversibleSpec target =
      options.direction == Direction::input_translation ? inverse(spec) : spec;

  if (options.strategy != Strategy::random_pick) return run_single(target, options, options.seed);

  SynthesisReport best = run_single(target, options, options.seed);
  std::string best_text = best.circuit.text();
  for (int t = 1; t < options.trials; ++t) {
    SynthesisReport cand = run_single(target, options, options.seed + static_cast<std::uint64_t>(t));
    std::string cand_text = cand.circuit.text();
    if (cand.circuit.size() < best.circuit.size() ||
        (cand.circuit.size() == best.circuit.size() && cand_text < best_text)) {
      best = std::move(cand);
      best_text = std::move(cand_text);
    }
  }
  return best;
}

std::vector<BitPattern> neighbor_candidates(const BitPattern& b) {
  std::vector<BitPattern> out;
  out.reserve(static_cast<std::size_t>(b.width));
  for (int bit = 0; bit < b.width; ++bit) out.emplace_back(b.value ^ (1u << bit), b.width);
  return out;
}

ToffoliGate swap_gate(const BitPattern& p, const BitPattern& q) {
  if (hamming(p, q) != 1)
    throw std::invalid_argument("swap gate requires patterns at Hamming distance 1");
  return swap_gate_raw(p.value, q.value, p.width);
}

Circuit reduce_controls(const Circuit& circuit, const ReversibleSpec& spec) {
  if (circuit.width() != spec.lines())
    throw std::invalid_argument("circuit width does not match the specification");
  std::vector<ToffoliGate> gates = circuit.gates();
  const auto& table = spec.table();

  const auto realizes_spec = [&]() {
    for (std::uint32_t row = 0; row < table.size(); ++row) {
      std::uint32_t v = row;
      for (auto it = gates.rbegin(); it != gates.rend(); ++it) v = it->apply(v);
      if (v != table[row]) return false;
    }
    return true;
  };
  if (!realizes_spec())
    throw std::invalid_argument(
        "control reduction requires a circuit that realizes the specification in reversed order");

  for (std::size_t gi = 0; gi < gates.size(); ++gi) {
    for (int line = 0; line < circuit.width(); ++line) {
      const std::uint32_t bit = 1u << line;
      for (int polarity = 0; polarity < 2; ++polarity) {  // positive first
        const ToffoliGate saved = gates[gi];
        if (polarity == 0 && (saved.positive() & bit)) {
          gates[gi] = ToffoliGate(saved.width(), saved.target(), saved.positive() & ~bit,
                                  saved.negative());
        } else if (polarity == 1 && (saved.negative() & bit)) {
          gates[gi] = ToffoliGate(saved.width(), saved.target(), saved.positive(),
                                  saved.negative() & ~bit);
        } else {
          continue;
        }
        if (!realizes_spec()) gates[gi] = saved;
      }
    }
  }
  return Circuit(circuit.width(), std::move(gates));
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::ascending:
      return "bsssn";
    case Strategy::lowest_value:
      return "var";
    case Strategy::random_pick:
      return "random";
  }
  return "bsssn";
}

Strategy strategy_from_string(std::string_view name) {
  if (name == "bsssn" || name == "ascending") return Strategy::ascending;
  if (name == "var" || name == "var_bsssn" || name == "lowest-value" || name == "lowest_value")
    return Strategy::lowest_value;
  if (name == "random") return Strategy::random_pick;
  throw ParseError("unknown strategy '" + std::string(name) + "'");
}

}  // namespace revsynth
