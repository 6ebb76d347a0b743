#pragma once

#include <string>
#include <vector>

#include "groupkit/groupspec.hpp"

namespace groupkit {

// The fixed survey corpus, in a stable order:
//   cyclic(1..24); dihedral(1..12); dicyclic(2..6); sym(3..6); alt(4..6);
//   semidirect(p,q,r) over all valid triples with p,q >= 2, p*q <= 200,
//   ordered by p, then q, then r; unordered pairwise products (repetition
//   allowed) of sym(3), sym(4), cyclic(2..6), dihedral(4), alt(4).
std::vector<GroupSpec> builtin_corpus();

// One spec per line; blank lines and lines starting with '#' are skipped.
std::vector<GroupSpec> load_corpus_file(const std::string& path);

// "builtin" names the builtin corpus; anything else is read as a file path.
std::vector<GroupSpec> resolve_corpus(const std::string& name_or_path);

}  // namespace groupkit
