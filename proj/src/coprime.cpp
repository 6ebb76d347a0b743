#include "groupkit/coprime.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "groupkit/errors.hpp"

namespace groupkit {

namespace {

DeltaSet delta_level_zero(const GroupPtr& g) {
  DeltaSet level{0, {}, {}};
  level.commutators.resize(static_cast<size_t>(g->order()));
  std::iota(level.commutators.begin(), level.commutators.end(), 0);
  level.power_closure = level.commutators;
  return level;
}

DeltaSet next_delta_level(const GroupPtr& g, const DeltaSet& prev) {
  const std::vector<Elem>& t = prev.power_closure;
  std::vector<char> mark(static_cast<size_t>(g->order()), 0);
  std::vector<Elem> commutators;
  for (Elem a : t) {
    int order_a = g->element_order(a);
    for (Elem b : t) {
      if (std::gcd(order_a, g->element_order(b)) != 1) continue;
      Elem c = g->commutator(a, b);
      if (!mark[static_cast<size_t>(c)]) {
        mark[static_cast<size_t>(c)] = 1;
        commutators.push_back(c);
      }
    }
  }
  std::sort(commutators.begin(), commutators.end());
  DeltaSet level{prev.level + 1, std::move(commutators), {}};
  level.power_closure = power_closure(g, level.commutators);
  return level;
}

}  // namespace

std::vector<Elem> power_closure(const GroupPtr& g, const std::vector<Elem>& s) {
  if (s.empty()) return {};
  std::vector<char> mark(static_cast<size_t>(g->order()), 0);
  mark[0] = 1;
  for (Elem x : s) {
    g->check_element(x);
    Elem y = x;
    while (y != 0) {
      mark[static_cast<size_t>(y)] = 1;
      y = g->mul(y, x);
    }
  }
  std::vector<Elem> closure;
  for (Elem x = 0; x < g->order(); ++x) {
    if (mark[static_cast<size_t>(x)]) closure.push_back(x);
  }
  return closure;
}

DeltaSet delta_star_set(const GroupPtr& g, int level) {
  if (level < 0) throw ParameterError("negative commutator level");
  DeltaSet current = delta_level_zero(g);
  for (int k = 1; k <= level; ++k) current = next_delta_level(g, current);
  return current;
}

DeltaLevels::DeltaLevels(GroupPtr g) : g_(std::move(g)) {}

const DeltaSet& DeltaLevels::level(int k) {
  if (k < 0) throw ParameterError("negative commutator level");
  std::lock_guard<std::mutex> lock(mutex_);
  if (levels_.empty()) levels_.push_back(delta_level_zero(g_));
  while (static_cast<int>(levels_.size()) <= k) {
    levels_.push_back(next_delta_level(g_, levels_.back()));
  }
  return levels_[static_cast<size_t>(k)];
}

Subgroup generated_dk(const GroupPtr& g, int k) {
  return generated_subgroup(g, delta_star_set(g, k).commutators);
}

CheckVerdict focal_check(const GroupPtr& g, int k, int p) {
  if (k < 0) throw ParameterError("negative commutator level");
  if (!is_prime(p) || g->order() % p != 0) {
    throw ParameterError(std::to_string(p) + " is not a prime divisor of the group order");
  }
  if (!is_soluble(g)) {
    throw HypothesisError("focal check requires a soluble group");
  }

  int n_prime = g->order();
  while (n_prime % p == 0) n_prime /= p;

  Subgroup sylow = sylow_subgroup(g, p);
  DeltaSet delta = delta_star_set(g, k);

  // Primary reading: the n'-th powers that land in P. Alternative reading:
  // powers of the commutators that themselves lie in P. Both are generated;
  // only the primary one is asserted, a difference is surfaced in the note.
  std::vector<Elem> powers_in_p;
  std::vector<Elem> powers_of_p_members;
  for (Elem c : delta.commutators) {
    Elem e = g->power(c, n_prime);
    if (sylow.contains(e)) powers_in_p.push_back(e);
    if (sylow.contains(c)) powers_of_p_members.push_back(e);
  }
  Subgroup lhs = generated_subgroup(g, powers_in_p);
  Subgroup alternative = generated_subgroup(g, powers_of_p_members);

  SeriesReport fitting = lower_fitting_series(g, std::max(8, k + 1));
  Subgroup rhs = intersect(sylow, fitting.term_at(k));

  std::string note = "k=" + std::to_string(k) + " p=" + std::to_string(p);
  if (!alternative.same_members(lhs)) {
    note += "; alternative reading generates order " +
            std::to_string(alternative.size()) + " instead of " +
            std::to_string(lhs.size());
  }
  return CheckVerdict::make("focal", true, lhs.same_members(rhs), std::nullopt,
                            std::move(note));
}

}  // namespace groupkit
