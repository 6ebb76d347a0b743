#include "groupkit/series.hpp"

#include <string>
#include <utility>

#include "groupkit/coprime.hpp"
#include "groupkit/errors.hpp"

namespace groupkit {

namespace {

// Shared descent loop. Stops without a repeat at the first trivial term;
// keeps one repeated term when the series settles on a nontrivial subgroup;
// reports stabilized = false only when max_terms ran out first.
template <class Step>
SeriesReport descend(SeriesKind kind, Subgroup start, int max_terms, Step step) {
  SeriesReport report{kind, {std::move(start)}, true};
  if (report.terms.back().is_trivial()) return report;
  while (true) {
    if (static_cast<int>(report.terms.size()) >= max_terms) {
      report.stabilized = false;
      return report;
    }
    Subgroup next = step(report.terms.back());
    bool repeated = next.same_members(report.terms.back());
    bool trivial = next.is_trivial();
    report.terms.push_back(std::move(next));
    if (repeated || trivial) return report;
  }
}

}  // namespace

const Subgroup& SeriesReport::term_at(int k) const {
  if (k < 0) throw ParameterError("negative series index");
  if (k < static_cast<int>(terms.size())) return terms[static_cast<size_t>(k)];
  if (!stabilized) {
    throw InternalError("series term " + std::to_string(k) +
                        " requested beyond an unstabilized tail");
  }
  return terms.back();
}

std::vector<int> SeriesReport::term_orders() const {
  std::vector<int> orders;
  orders.reserve(terms.size());
  for (const Subgroup& t : terms) orders.push_back(t.size());
  return orders;
}

SeriesReport lower_central_series(const GroupPtr& g, int max_terms) {
  Subgroup whole = Subgroup::whole(g);
  return descend(SeriesKind::lower_central, whole, max_terms,
                 [&](const Subgroup& last) { return commutator_subgroup(last, whole); });
}

SeriesReport derived_series(const GroupPtr& g, int max_terms) {
  return descend(SeriesKind::derived, Subgroup::whole(g), max_terms,
                 [](const Subgroup& last) { return commutator_subgroup(last, last); });
}

Subgroup nilpotent_residual(const GroupPtr& g) {
  SeriesReport series = lower_central_series(g);
  if (!series.stabilized) {
    throw InternalError("lower central series did not stabilize");
  }
  return series.last();
}

bool is_nilpotent(const GroupPtr& g) { return nilpotent_residual(g).is_trivial(); }

bool is_nilpotent(const Subgroup& h) {
  if (h.is_whole()) return is_nilpotent(h.parent());
  if (h.is_trivial()) return true;
  auto [table, embedding] = subgroup_table(h);
  return is_nilpotent(table);
}

bool is_soluble(const GroupPtr& g) {
  SeriesReport series = derived_series(g);
  if (!series.stabilized) {
    throw InternalError("derived series did not stabilize");
  }
  return series.last().is_trivial();
}

std::optional<int> fitting_height(const GroupPtr& g) {
  GroupPtr current = g;
  int height = 0;
  while (current->order() > 1) {
    Subgroup fitting = fitting_subgroup(current);
    if (fitting.is_trivial()) return std::nullopt;
    current = quotient(current, fitting).first;
    ++height;
  }
  return height;
}

SeriesReport lower_fitting_series(const GroupPtr& g, int max_k) {
  if (max_k < 0) throw ParameterError("negative series bound");
  return descend(SeriesKind::lower_fitting, Subgroup::whole(g), max_k + 1,
                 [&](const Subgroup& last) {
                   if (last.is_whole()) return nilpotent_residual(g);
                   auto [table, embedding] = subgroup_table(last);
                   Subgroup residual = nilpotent_residual(table);
                   std::vector<Elem> mapped;
                   mapped.reserve(residual.members().size());
                   for (Elem m : residual.members()) {
                     mapped.push_back(embedding.map[static_cast<size_t>(m)]);
                   }
                   return Subgroup(g, std::move(mapped), {}, Subgroup::Trusted{});
                 });
}

Subgroup fitting_subgroup(const GroupPtr& g) {
  std::vector<Elem> seeds;
  for (int p : prime_divisors(g->order())) {
    const Subgroup core = p_core(g, p);
    seeds.insert(seeds.end(), core.members().begin(), core.members().end());
  }
  Subgroup fitting = generated_subgroup(g, seeds);
  if (!fitting.is_normal()) throw InternalError("Fitting subgroup came out non-normal");
  if (!is_nilpotent(fitting)) throw InternalError("Fitting subgroup came out non-nilpotent");
  return fitting;
}

}  // namespace groupkit
