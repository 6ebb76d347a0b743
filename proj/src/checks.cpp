#include "groupkit/checks.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "groupkit/errors.hpp"

namespace groupkit {

CheckVerdict CheckVerdict::make(std::string name, bool hypothesis, bool conclusion,
                                std::optional<Witness> witness, std::string note,
                                bool open_conjecture) {
  return CheckVerdict{std::move(name), hypothesis,      conclusion,
                      !hypothesis || conclusion,        std::move(witness),
                      std::move(note),                  open_conjecture};
}

TheoremSelector TheoremSelector::parse(const std::string& text) {
  if (text == "bw") return {Kind::bw, 1};
  if (text == "bs") return {Kind::bs, 1};
  if (text == "main") return {Kind::main, 1};
  if (text.rfind("level:", 0) == 0) {
    const std::string digits = text.substr(6);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      int level = std::stoi(digits);
      if (level >= 1 && level <= 4) return {Kind::level, level};
      throw ParameterError("level " + digits + " outside 1..4");
    }
  }
  throw ParameterError("unknown theorem selector '" + text +
                       "' (expected bw, bs, main, or level:1..4)");
}

std::string TheoremSelector::name() const {
  switch (kind) {
    case Kind::bw: return "bw";
    case Kind::bs: return "bs";
    case Kind::main: return "main";
    case Kind::level: return "level:" + std::to_string(level);
  }
  return "?";
}

std::pair<bool, std::optional<Witness>> coprime_product_property(
    const GroupPtr& g, const std::vector<Elem>& s) {
  std::vector<Elem> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Elem x : sorted) g->check_element(x);
  for (Elem x : sorted) {
    int order_x = g->element_order(x);
    for (Elem y : sorted) {
      int order_y = g->element_order(y);
      if (std::gcd(order_x, order_y) != 1) continue;
      int order_product = g->element_order(g->mul(x, y));
      if (order_product != order_x * order_y) {
        return {false, Witness{x, y, order_x, order_y, order_product}};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

std::vector<Elem> all_elements(const GroupPtr& g) {
  std::vector<Elem> elems(static_cast<size_t>(g->order()));
  std::iota(elems.begin(), elems.end(), 0);
  return elems;
}

std::vector<Elem> ordinary_commutators(const GroupPtr& g) {
  std::vector<char> mark(static_cast<size_t>(g->order()), 0);
  std::vector<Elem> values;
  for (Elem x = 0; x < g->order(); ++x) {
    for (Elem y = 0; y < g->order(); ++y) {
      Elem c = g->commutator(x, y);
      if (!mark[static_cast<size_t>(c)]) {
        mark[static_cast<size_t>(c)] = 1;
        values.push_back(c);
      }
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

CheckVerdict theorem_check(const GroupPtr& g, const TheoremSelector& selector) {
  std::vector<Elem> hypothesis_set;
  bool conclusion = false;
  bool open = false;
  switch (selector.kind) {
    case TheoremSelector::Kind::bw:
      hypothesis_set = all_elements(g);
      conclusion = is_nilpotent(g);
      break;
    case TheoremSelector::Kind::bs: {
      hypothesis_set = ordinary_commutators(g);
      Subgroup whole = Subgroup::whole(g);
      conclusion = is_nilpotent(commutator_subgroup(whole, whole));
      break;
    }
    case TheoremSelector::Kind::main: {
      hypothesis_set = delta_star_set(g, 1).power_closure;
      std::optional<int> height = fitting_height(g);
      conclusion = is_nilpotent(nilpotent_residual(g)) && height.has_value() &&
                   *height <= 2;
      break;
    }
    case TheoremSelector::Kind::level: {
      hypothesis_set = delta_star_set(g, selector.level).power_closure;
      SeriesReport fitting = lower_fitting_series(g, std::max(8, selector.level + 1));
      conclusion = is_nilpotent(fitting.term_at(selector.level));
      open = selector.level >= 2;
      break;
    }
  }
  auto [hypothesis, witness] = coprime_product_property(g, hypothesis_set);
  return CheckVerdict::make(selector.name(), hypothesis, conclusion,
                            std::move(witness), "", open);
}

bool bw_equivalence(const GroupPtr& g) {
  return coprime_product_property(g, all_elements(g)).first == is_nilpotent(g);
}

bool coprime_action_check(const GroupPtr& w, const Subgroup& n, const Subgroup& a) {
  if (n.parent() != w || a.parent() != w) {
    throw ParameterError("subgroups belong to a different parent group");
  }
  if (!n.is_normal()) throw HypothesisError("N is not normal");
  if (std::gcd(n.size(), a.size()) != 1) {
    throw HypothesisError("orders of N and A are not coprime");
  }

  Subgroup commutators = commutator_subgroup(n, a);
  Subgroup fixed = intersect(n, centralizer(w, a.members()));
  std::vector<char> product(static_cast<size_t>(w->order()), 0);
  int distinct = 0;
  for (Elem u : commutators.members()) {
    for (Elem v : fixed.members()) {
      Elem x = w->mul(u, v);
      if (!n.contains(x)) return false;
      if (!product[static_cast<size_t>(x)]) {
        product[static_cast<size_t>(x)] = 1;
        ++distinct;
      }
    }
  }
  return distinct == n.size();
}

std::vector<Subgroup> normal_closure_family(const GroupPtr& g) {
  std::vector<char> seen(static_cast<size_t>(g->order()), 0);
  std::set<std::vector<Elem>> known;
  std::vector<Subgroup> family;
  for (Elem x = 0; x < g->order(); ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    // Conjugate elements share their normal closure; mark the whole class.
    for (Elem t = 0; t < g->order(); ++t) {
      seen[static_cast<size_t>(g->conjugate(x, t))] = 1;
    }
    Subgroup closure = normal_closure(g, {x});
    if (known.insert(closure.members()).second) family.push_back(std::move(closure));
  }
  return family;
}

CheckVerdict lemma3_check(const GroupPtr& g) {
  std::vector<Elem> x_set = delta_star_set(g, 1).power_closure;
  auto [hypothesis, witness] = coprime_product_property(g, x_set);
  std::string note = "N restricted to normal closures of single elements";
  if (!hypothesis) {
    return CheckVerdict::make("lemma3", false, true, std::move(witness),
                              std::move(note));
  }

  bool conclusion = true;
  for (const Subgroup& n : normal_closure_family(g)) {
    for (Elem x : x_set) {
      if (std::gcd(g->element_order(x), n.size()) != 1) continue;
      for (Elem member : n.members()) {
        if (g->commutator(x, member) != 0) {
          conclusion = false;
          note += "; [" + std::to_string(x) + ", " + std::to_string(member) +
                  "] != identity with |N| = " + std::to_string(n.size());
          break;
        }
      }
      if (!conclusion) break;
    }
    if (!conclusion) break;
  }
  return CheckVerdict::make("lemma3", true, conclusion, std::nullopt, std::move(note));
}

}  // namespace groupkit
