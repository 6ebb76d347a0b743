#pragma once

#include <optional>
#include <vector>

#include "groupkit/subgroup.hpp"

namespace groupkit {

enum class SeriesKind { lower_central, derived, lower_fitting };

// A descending subgroup series. terms[0] is the whole group. When the series
// reaches the trivial subgroup it stops there; when it stabilizes at a
// nontrivial subgroup the repeated term is kept so the tail is visible, so
// in that case the last two terms are equal. stabilized is false only when
// the term cap cut the computation short.
struct SeriesReport {
  SeriesKind kind;
  std::vector<Subgroup> terms;
  bool stabilized = true;

  const Subgroup& last() const { return terms.back(); }

  // Term k, reading past the end as the stable value. Throws ParameterError
  // for k < 0 and InternalError when asked beyond an unstabilized tail.
  const Subgroup& term_at(int k) const;

  std::vector<int> term_orders() const;
};

SeriesReport lower_central_series(const GroupPtr& g, int max_terms = 64);
SeriesReport derived_series(const GroupPtr& g, int max_terms = 64);

// Last term of the lower central series: the smallest normal subgroup with
// nilpotent quotient.
Subgroup nilpotent_residual(const GroupPtr& g);

bool is_nilpotent(const GroupPtr& g);
bool is_nilpotent(const Subgroup& h);

bool is_soluble(const GroupPtr& g);

// Length of the Fitting series, i.e. how many times one must factor out the
// Fitting subgroup to reach the trivial group. Empty for insoluble groups.
std::optional<int> fitting_height(const GroupPtr& g);

}  // namespace groupkit
