#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "revsynth/circuit.hpp"

namespace revsynth {

// A peephole rewrite over a fixed-size gate window. Every shipped rule
// preserves circuit equivalence; soundness is checked by exhaustive
// simulation in the tests. New rules slot into template_rules().
struct RewriteRule {
  std::string name;
  std::size_t window;
  // Returns the replacement gates if the rule matches at the window start.
  std::function<std::optional<std::vector<ToffoliGate>>(std::span<const ToffoliGate>)> apply;
};

// Built-in rules, in application priority order:
//   pair_cancel    - adjacent identical gates vanish
//   not_pushthrough- T(x:y) T(:x) T(:y) -> T(:x) T(x:y)
//   polarity_merge - adjacent gates equal up to one control's polarity merge
//                    into one gate without that control
const std::vector<RewriteRule>& template_rules();

struct ReduceStats {
  std::size_t pairs_removed = 0;      // identical pairs deleted
  std::size_t template_rewrites = 0;  // template rule applications
  std::size_t rewrites() const { return pairs_removed + template_rewrites; }
};

// True iff gates i and j (which must be identical) can both be deleted: no
// gate strictly between them has the pair's target among its controls or its
// target among the pair's controls. Sufficient, not necessary.
bool removable_pair(const Circuit& circuit, std::size_t i, std::size_t j);

// Repeatedly deletes the leftmost removable identical pair (nearest partner
// first) until none remains.
Circuit remove_useless_pairs(const Circuit& circuit, ReduceStats* stats = nullptr);

// Applies template_rules() leftmost-first, restarting after every rewrite,
// until no rule matches.
Circuit apply_templates(const Circuit& circuit, ReduceStats* stats = nullptr);

// Alternates remove_useless_pairs and apply_templates to a fixpoint. Gate
// count never increases; the result is equivalent to the input and a further
// reduce() is a no-op.
Circuit reduce(const Circuit& circuit, ReduceStats* stats = nullptr);

}  // namespace revsynth
