#include "groupkit/subgroup.hpp"

#include <algorithm>
#include <numeric>

#include "groupkit/errors.hpp"

namespace groupkit {

namespace {

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) {
    throw ParameterError("subgroups belong to different parent groups");
  }
}

std::vector<char> build_mask(int order, const std::vector<Elem>& members) {
  std::vector<char> mask(static_cast<size_t>(order), 0);
  for (Elem m : members) mask[static_cast<size_t>(m)] = 1;
  return mask;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  for (Elem m : members_) parent_->check_element(m);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_[0] != 0) {
    throw ValidationError("subgroup misses the identity");
  }
  mask_ = build_mask(parent_->order(), members_);
  for (Elem a : members_) {
    for (Elem b : members_) {
      if (!mask_[static_cast<size_t>(parent_->mul(a, b))]) {
        throw ValidationError("subgroup not closed: product of " + std::to_string(a) +
                              " and " + std::to_string(b) + " escapes");
      }
    }
  }
  generators_ = members_;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members,
                   std::vector<Elem> generators, Trusted)
    : parent_(std::move(parent)),
      members_(std::move(members)),
      generators_(std::move(generators)) {
  std::sort(members_.begin(), members_.end());
  if (generators_.empty()) generators_ = members_;
  mask_ = build_mask(parent_->order(), members_);
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Elem> all(static_cast<size_t>(parent->order()));
  std::iota(all.begin(), all.end(), 0);
  std::vector<Elem> gens = all;
  return Subgroup(std::move(parent), std::move(all), std::move(gens), Trusted{});
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {0}, {0}, Trusted{});
}

bool Subgroup::contains_all(const Subgroup& other) const {
  require_same_parent(*this, other);
  for (Elem m : other.members_) {
    if (!mask_[static_cast<size_t>(m)]) return false;
  }
  return true;
}

bool Subgroup::same_members(const Subgroup& other) const {
  require_same_parent(*this, other);
  return members_ == other.members_;
}

bool Subgroup::is_normal() const {
  for (Elem g = 0; g < parent_->order(); ++g) {
    for (Elem m : members_) {
      if (!mask_[static_cast<size_t>(parent_->conjugate(m, g))]) return false;
    }
  }
  return true;
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<Elem>& seeds) {
  for (Elem s : seeds) g->check_element(s);
  std::vector<char> mask(static_cast<size_t>(g->order()), 0);
  std::vector<Elem> queue{0};
  mask[0] = 1;
  for (size_t front = 0; front < queue.size(); ++front) {
    Elem x = queue[front];
    for (Elem s : seeds) {
      Elem y = g->mul(x, s);
      if (!mask[static_cast<size_t>(y)]) {
        mask[static_cast<size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  std::vector<Elem> gens(seeds);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Subgroup(g, std::move(queue), std::move(gens), Subgroup::Trusted{});
}

Subgroup normal_closure(const GroupPtr& g, const std::vector<Elem>& seeds) {
  for (Elem s : seeds) g->check_element(s);
  std::vector<char> mark(static_cast<size_t>(g->order()), 0);
  std::vector<Elem> conjugates;
  for (Elem s : seeds) {
    for (Elem t = 0; t < g->order(); ++t) {
      Elem c = g->conjugate(s, t);
      if (!mark[static_cast<size_t>(c)]) {
        mark[static_cast<size_t>(c)] = 1;
        conjugates.push_back(c);
      }
    }
  }
  return generated_subgroup(g, conjugates);
}

Subgroup centralizer(const GroupPtr& g, const std::vector<Elem>& elems) {
  if (elems.empty()) throw ParameterError("centralizer of an empty set");
  for (Elem s : elems) g->check_element(s);
  std::vector<Elem> members;
  for (Elem x = 0; x < g->order(); ++x) {
    bool commutes = true;
    for (Elem s : elems) {
      if (g->mul(x, s) != g->mul(s, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) members.push_back(x);
  }
  return Subgroup(g, std::move(members), {}, Subgroup::Trusted{});
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) {
  if (h.parent() != g) throw ParameterError("subgroup of a different parent group");
  std::vector<Elem> members;
  for (Elem x = 0; x < g->order(); ++x) {
    bool fixes = true;
    for (Elem m : h.members()) {
      if (!h.contains(g->conjugate(m, x))) {
        fixes = false;
        break;
      }
    }
    if (fixes) members.push_back(x);
  }
  return Subgroup(g, std::move(members), {}, Subgroup::Trusted{});
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<Elem> members;
  for (Elem m : a.members()) {
    if (b.contains(m)) members.push_back(m);
  }
  return Subgroup(a.parent(), std::move(members), {}, Subgroup::Trusted{});
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  const GroupPtr& g = a.parent();
  std::vector<char> mark(static_cast<size_t>(g->order()), 0);
  std::vector<Elem> values;
  for (Elem x : a.members()) {
    for (Elem y : b.members()) {
      Elem c = g->commutator(x, y);
      if (!mark[static_cast<size_t>(c)]) {
        mark[static_cast<size_t>(c)] = 1;
        values.push_back(c);
      }
    }
  }
  return generated_subgroup(g, values);
}

std::pair<GroupPtr, GroupHom> quotient(const GroupPtr& g, const Subgroup& n) {
  if (n.parent() != g) throw ParameterError("subgroup of a different parent group");
  for (Elem t = 0; t < g->order(); ++t) {
    for (Elem m : n.members()) {
      if (!n.contains(g->conjugate(m, t))) {
        throw ParameterError("quotient by a non-normal subgroup: conjugate of " +
                             std::to_string(m) + " by " + std::to_string(t) +
                             " escapes");
      }
    }
  }

  // Cosets are numbered by their least representative, scanning upward, so
  // the identity coset is 0.
  std::vector<int> coset(static_cast<size_t>(g->order()), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g->order(); ++x) {
    if (coset[static_cast<size_t>(x)] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem m : n.members()) coset[static_cast<size_t>(g->mul(x, m))] = id;
  }

  int m = static_cast<int>(reps.size());
  std::vector<int> flat(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      flat[static_cast<size_t>(a) * m + b] = coset[static_cast<size_t>(g->mul(reps[a], reps[b]))];
    }
  }
  GroupPtr q = GroupTable::from_flat_trusted(
      std::move(flat), m, g->label() + "/" + std::to_string(n.size()));
  return {q, GroupHom{g, q, std::move(coset)}};
}

std::pair<GroupPtr, GroupHom> subgroup_table(const Subgroup& h) {
  const GroupPtr& g = h.parent();
  const std::vector<Elem>& mem = h.members();
  int m = h.size();
  std::vector<int> position(static_cast<size_t>(g->order()), -1);
  for (int i = 0; i < m; ++i) position[static_cast<size_t>(mem[i])] = i;
  std::vector<int> flat(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int pos = position[static_cast<size_t>(g->mul(mem[i], mem[j]))];
      if (pos < 0) throw InternalError("subgroup member list is not closed");
      flat[static_cast<size_t>(i) * m + j] = pos;
    }
  }
  GroupPtr table = GroupTable::from_flat_trusted(
      std::move(flat), m, g->label() + "[" + std::to_string(m) + "]");
  return {table, GroupHom{table, g, mem}};
}

Subgroup sylow_subgroup(const GroupPtr& g, int p) {
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
  int rest = g->order();
  int p_part = 1;
  while (rest % p == 0) {
    p_part *= p;
    rest /= p;
  }
  if (p_part == 1) return Subgroup::trivial(g);

  auto p_power_order = [&](Elem x) {
    int ord = g->element_order(x);
    while (ord % p == 0) ord /= p;
    return ord == 1;
  };

  Elem seed = -1;
  for (Elem x = 1; x < g->order(); ++x) {
    if (g->element_order(x) == p) {
      seed = x;
      break;
    }
  }
  if (seed < 0) throw InternalError("no element of prime order " + std::to_string(p));

  std::vector<Elem> gens{seed};
  Subgroup sylow = generated_subgroup(g, gens);
  while (sylow.size() < p_part) {
    // A p-subgroup short of full p-part is proper in a p-subgroup of its
    // normalizer, so an extending element of p-power order must exist there.
    Subgroup norm = normalizer(g, sylow);
    Elem extender = -1;
    for (Elem y : norm.members()) {
      if (!sylow.contains(y) && p_power_order(y)) {
        extender = y;
        break;
      }
    }
    if (extender < 0) throw InternalError("Sylow extension stalled at order " +
                                          std::to_string(sylow.size()));
    gens.push_back(extender);
    sylow = generated_subgroup(g, gens);
  }
  return sylow;
}

Subgroup p_core(const GroupPtr& g, int p) {
  Subgroup core = sylow_subgroup(g, p);
  for (Elem t = 0; t < g->order() && !core.is_trivial(); ++t) {
    std::vector<Elem> conj;
    conj.reserve(core.members().size());
    for (Elem m : core.members()) conj.push_back(g->conjugate(m, t));
    core = intersect(core, Subgroup(g, std::move(conj), {}, Subgroup::Trusted{}));
  }
  if (!core.is_normal()) throw InternalError("p-core came out non-normal");
  for (Elem m : core.members()) {
    int ord = g->element_order(m);
    while (ord % p == 0) ord /= p;
    if (ord != 1) throw InternalError("p-core contains an element of foreign order");
  }
  return core;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> primes;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace groupkit
