#pragma once

#include <deque>
#include <mutex>
#include <vector>

#include "groupkit/series.hpp"
#include "groupkit/verdict.hpp"

namespace groupkit {

// One level of the coprime-commutator recursion: the commutators produced at
// this level and their closure under taking powers. Both lists are sorted.
// Level 0 is special: its "commutators" are all of G.
struct DeltaSet {
  int level = 0;
  std::vector<Elem> commutators;
  std::vector<Elem> power_closure;
};

// All distinct powers of the elements of s (the identity included whenever s
// is nonempty). Sorted ascending.
std::vector<Elem> power_closure(const GroupPtr& g, const std::vector<Elem>& s);

// Level k of the recursion: level 0 is all of G; level k+1 consists of the
// commutators [a, b] over pairs a, b from the power closure of level k whose
// element orders are coprime.
DeltaSet delta_star_set(const GroupPtr& g, int level);

// Lazily extended cache of the delta levels of one group. Thread-safe;
// references returned by level() stay valid as further levels are added.
class DeltaLevels {
 public:
  explicit DeltaLevels(GroupPtr g);
  const DeltaSet& level(int k);

 private:
  GroupPtr g_;
  std::deque<DeltaSet> levels_;
  std::mutex mutex_;
};

// Iterated nilpotent residual: terms G, R(G), R(R(G)), ... where R is the
// nilpotent residual. Each step is computed on the standalone table of the
// previous term and mapped back into G.
SeriesReport lower_fitting_series(const GroupPtr& g, int max_k = 8);

// Subgroup generated by the level-k commutators.
Subgroup generated_dk(const GroupPtr& g, int k);

// Compares the subgroup of a Sylow p-subgroup P generated by n'-th powers of
// level-k commutators landing in P against P's intersection with the k-th
// lower Fitting term (n' = the p'-part of |G|). Requires a soluble group
// (HypothesisError) and a prime p dividing |G| (ParameterError).
CheckVerdict focal_check(const GroupPtr& g, int k, int p);

}  // namespace groupkit
