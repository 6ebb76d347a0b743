#pragma once

#include <string>
#include <vector>

#include "groupkit/group.hpp"

namespace groupkit {

// Parsed form of the group-description DSL. Which fields are meaningful
// depends on kind:
//   cyclic/dihedral/dicyclic/sym/alt: n
//   semidirect: p, q, r
//   perm: degree, cycles (one entry per generator, 0-based points)
//   table: path
//   product: factors
struct GroupSpec {
  enum class Kind { cyclic, dihedral, dicyclic, sym, alt, semidirect, perm, table, product };

  Kind kind = Kind::cyclic;
  int n = 1;
  int p = 0, q = 0, r = 0;
  int degree = 0;
  std::vector<std::vector<std::vector<int>>> cycles;
  std::string path;
  std::vector<GroupSpec> factors;

  // Canonical form: no whitespace, 1-based cycle points. Parsing the result
  // reproduces the spec.
  std::string to_string() const;

  bool operator==(const GroupSpec&) const = default;
};

// Grammar:
//   spec   := atom | "product" "(" spec { "," spec } ")"
//   atom   := name "(" int ")"                        name in cyclic|dihedral|dicyclic|sym|alt
//           | "semidirect" "(" int "," int "," int ")"
//           | "perm" "(" int ";" cycles { "," cycles } ")"
//           | "table" "(" path ")"
//   cycles := { "(" int { int } ")" }                 points are 1-based
// Whitespace-insensitive outside of table paths. Errors are ParseError with
// line/column and the expected tokens; out-of-range parameters (dihedral(0),
// sym(8), a bad semidirect triple) are also rejected here.
GroupSpec parse_spec(const std::string& text);

struct RealizeOptions {
  int max_order = kDefaultMaxOrder;
  bool strict_assoc = false;  // exhaustive associativity check for table()
};

// Builds the group the spec describes. File problems surface as IoError,
// oversize results as SizeLimitError.
GroupPtr realize(const GroupSpec& spec, const RealizeOptions& options = {});

// Order implied by the spec shape alone; 0 when it cannot be known without
// realizing (perm, table).
long long predicted_order(const GroupSpec& spec);

}  // namespace groupkit
