#pragma once

#include <optional>
#include <string>

#include "groupkit/group.hpp"

namespace groupkit {

// A pair of coprime-order elements whose product's order is not the product
// of their orders; the smallest such pair in (x, y) lexicographic order.
struct Witness {
  Elem x = 0;
  Elem y = 0;
  int order_x = 1;
  int order_y = 1;
  int order_product = 1;
};

// Outcome of one hypothesis/conclusion check on one group. sound is always
// derived as (!hypothesis || conclusion); open_conjecture marks checks whose
// implication is not a proved theorem, so an unsound instance is a candidate
// counterexample rather than a bug.
struct CheckVerdict {
  std::string check_name;
  bool hypothesis = false;
  bool conclusion = false;
  bool sound = true;
  std::optional<Witness> witness;
  std::string note;
  bool open_conjecture = false;

  static CheckVerdict make(std::string name, bool hypothesis, bool conclusion,
                           std::optional<Witness> witness = std::nullopt,
                           std::string note = "", bool open_conjecture = false);
};

}  // namespace groupkit
