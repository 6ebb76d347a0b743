#pragma once

#include <vector>

#include "groupkit/errors.hpp"

namespace groupkit {

// A permutation of {0, ..., degree-1}, stored as its image list.
struct Perm {
  std::vector<int> images;

  Perm() = default;
  explicit Perm(std::vector<int> im) : images(std::move(im)) {}

  int degree() const { return static_cast<int>(images.size()); }
  int operator[](int point) const { return images[point]; }
  bool is_identity() const;
  Perm inverse() const;

  static Perm identity(int degree);
  // Cycles use 0-based points and must be disjoint.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  friend bool operator==(const Perm&, const Perm&) = default;
};

// Applies a first, then b.
Perm compose(const Perm& a, const Perm& b);

// Throws ValidationError unless p is a bijection on {0, ..., degree-1}.
void validate_perm(const Perm& p);

}  // namespace groupkit
