#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupkit/coprime.hpp"

namespace groupkit {

// Which implication a check run verifies. The first three are proved
// theorems; "level" with level >= 2 is an open question, so its failures are
// candidate counterexamples rather than errors.
struct TheoremSelector {
  enum class Kind { bw, bs, main, level };

  Kind kind = Kind::bw;
  int level = 1;  // meaningful for Kind::level only

  // Accepts "bw", "bs", "main", "level:<k>" with k >= 1.
  static TheoremSelector parse(const std::string& text);
  std::string name() const;
};

// Whether every pair of coprime-order elements of s has a product of order
// o(x) * o(y). On failure also returns the least failing pair, scanning s
// ascending in x, then y.
std::pair<bool, std::optional<Witness>> coprime_product_property(
    const GroupPtr& g, const std::vector<Elem>& s);

CheckVerdict theorem_check(const GroupPtr& g, const TheoremSelector& selector);

// Whether the coprime product property on all of G coincides with G being
// nilpotent. Both directions are checked.
bool bw_equivalence(const GroupPtr& g);

// [N, A] * C_N(A) = N for a normal subgroup N and a subgroup A of coprime
// order acting on it by conjugation. Throws HypothesisError unless N is
// normal and gcd(|N|, |A|) = 1.
bool coprime_action_check(const GroupPtr& g, const Subgroup& n, const Subgroup& a);

// Normal closures of the single elements of g, deduplicated, in the order
// the distinct subgroups are first produced.
std::vector<Subgroup> normal_closure_family(const GroupPtr& g);

// Hypothesis: the coprime product property holds on the level-1 power
// closure X (same hypothesis as the "main" theorem check). Conclusion, when
// the hypothesis holds: every x in X centralizes every member of the
// normal-closure family whose order is coprime to o(x); vacuously true
// otherwise. The family restriction is recorded in the verdict note.
CheckVerdict lemma3_check(const GroupPtr& g);

}  // namespace groupkit
