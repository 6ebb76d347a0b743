#pragma once

#include <memory>
#include <string>
#include <vector>

#include "groupkit/perm.hpp"

namespace groupkit {

// Elements of a GroupTable are dense integer indices.
using Elem = int;

inline constexpr int kDefaultMaxOrder = 5040;

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

// How hard from_table() verifies associativity.
struct TableValidation {
  bool strict = false;              // force the exhaustive check at any order
  int exhaustive_limit = 512;       // full n^3 check at or below this order
  long long sample_count = 1000000; // triples sampled above the limit
};

// A finite group as an immutable multiplication table. Element 0 is always
// the identity; inverses and element orders are precomputed. Instances are
// safe to share across threads once constructed.
class GroupTable {
 public:
  int order() const { return order_; }
  const std::string& label() const { return label_; }

  Elem mul(Elem a, Elem b) const {
    return table_[static_cast<size_t>(a) * order_ + b];
  }
  Elem inverse(Elem a) const { return inverse_[a]; }
  int element_order(Elem x) const;
  Elem power(Elem x, long long e) const;
  Elem conjugate(Elem x, Elem g) const;   // g^-1 x g
  Elem commutator(Elem x, Elem y) const;  // x^-1 y^-1 x y
  bool is_abelian() const;

  // Right-multiplication action of x on element indices. The map is
  // faithful, so feeding the images of a generating set back into
  // from_permutations reproduces a group of the same order.
  Perm regular_perm(Elem x) const;

  // Throws ParameterError when x is outside [0, order).
  void check_element(Elem x) const;

  // Breadth-first closure of the generators; the identity receives index 0
  // and the remaining elements are indexed in discovery order.
  static GroupPtr from_permutations(int degree, const std::vector<Perm>& generators,
                                    int max_order = kDefaultMaxOrder,
                                    std::string label = "");

  // Accepts any multiplication table that satisfies the group laws. A table
  // whose identity sits at another index is relabeled so it lands at 0.
  static GroupPtr from_table(const std::vector<std::vector<int>>& matrix,
                             const TableValidation& validation = {},
                             std::string label = "");

  // File format: first data line is the order n, then n lines of n indices.
  // Lines whose first non-space character is '#' are comments.
  static GroupPtr read_table_file(const std::string& path,
                                  const TableValidation& validation = {});

  // For tables produced by constructions that are associative by design
  // (products, quotients, extracted subgroups). Still verifies the latin
  // property, identity and inverses; a failure is reported as InternalError.
  static GroupPtr from_flat_trusted(std::vector<int> flat, int order,
                                    std::string label);

 private:
  GroupTable(int order, std::vector<int> flat, std::string label);

  int order_ = 1;
  std::vector<int> table_;       // flattened order x order
  std::vector<int> inverse_;
  std::vector<int> elem_order_;
  std::string label_;
};

// Pair (i, j) of the factors maps to index i*|H| + j.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h,
                        int max_order = kDefaultMaxOrder);

// C_p x| C_q with the C_q generator conjugating the C_p generator to its
// r-th power. Requires gcd(r, p) = 1 and r^q = 1 (mod p).
GroupPtr semidirect_cyclic(int p, int q, int r);

// A map between groups, stored as the image of every source element.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;

  bool is_homomorphism() const;  // exhaustive over all source pairs
};

}  // namespace groupkit
