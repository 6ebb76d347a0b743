#pragma once

#include <utility>
#include <vector>

#include "groupkit/group.hpp"

namespace groupkit {

// A subgroup of a fixed parent group, stored as a sorted member list plus a
// membership bitmap. The validating constructor checks closure and inverses;
// internal callers that construct from already-closed sets use the Trusted
// tag to skip that work.
class Subgroup {
 public:
  struct Trusted {};

  Subgroup(GroupPtr parent, std::vector<Elem> members);
  Subgroup(GroupPtr parent, std::vector<Elem> members, std::vector<Elem> generators,
           Trusted);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  int size() const { return static_cast<int>(members_.size()); }

  bool contains(Elem x) const { return mask_[static_cast<size_t>(x)]; }
  bool contains_all(const Subgroup& other) const;
  bool same_members(const Subgroup& other) const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return size() == parent_->order(); }
  bool is_normal() const;

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;     // sorted ascending; always contains 0
  std::vector<Elem> generators_;  // may equal members_ when unknown
  std::vector<char> mask_;        // parent-order bitmap
};

// Closure of the seed set under multiplication, by breadth-first search.
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<Elem>& seeds);

// Smallest normal subgroup containing the seeds.
Subgroup normal_closure(const GroupPtr& g, const std::vector<Elem>& seeds);

// Centralizer of a nonempty element set. An empty set is a ParameterError.
Subgroup centralizer(const GroupPtr& g, const std::vector<Elem>& elems);

Subgroup normalizer(const GroupPtr& g, const Subgroup& h);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Subgroup generated by all commutators [a, b] with a in A, b in B.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

// G/N with cosets numbered by their least representative, in the ascending
// scan order of G. The returned map sends each parent element to its coset.
// Throws ParameterError (with a conjugation witness) when N is not normal.
std::pair<GroupPtr, GroupHom> quotient(const GroupPtr& g, const Subgroup& n);

// H as a standalone group; position i of the map is the parent element that
// standalone element i came from (i.e. the embedding H -> G).
std::pair<GroupPtr, GroupHom> subgroup_table(const Subgroup& h);

// A Sylow p-subgroup, grown from a single element of order p by repeatedly
// extending by a p-power-order element of its normalizer. p must be prime
// (ParameterError); when p does not divide |G| the trivial subgroup is
// returned.
Subgroup sylow_subgroup(const GroupPtr& g, int p);

// Largest normal p-subgroup: the intersection of the conjugates of any
// Sylow p-subgroup. For a prime p not dividing |G| this is trivial.
Subgroup p_core(const GroupPtr& g, int p);

// Fitting subgroup: product of the p-cores over primes dividing |G|.
Subgroup fitting_subgroup(const GroupPtr& g);

bool is_prime(int n);
std::vector<int> prime_divisors(int n);

}  // namespace groupkit
