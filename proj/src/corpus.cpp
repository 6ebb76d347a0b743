#include "groupkit/corpus.hpp"

#include <fstream>
#include <numeric>

#include "groupkit/errors.hpp"

namespace groupkit {

namespace {

GroupSpec sized(GroupSpec::Kind kind, int n) {
  GroupSpec spec;
  spec.kind = kind;
  spec.n = n;
  return spec;
}

}  // namespace

std::vector<GroupSpec> builtin_corpus() {
  std::vector<GroupSpec> corpus;
  for (int n = 1; n <= 24; ++n) corpus.push_back(sized(GroupSpec::Kind::cyclic, n));
  for (int n = 1; n <= 12; ++n) corpus.push_back(sized(GroupSpec::Kind::dihedral, n));
  for (int n = 2; n <= 6; ++n) corpus.push_back(sized(GroupSpec::Kind::dicyclic, n));
  for (int n = 3; n <= 6; ++n) corpus.push_back(sized(GroupSpec::Kind::sym, n));
  for (int n = 4; n <= 6; ++n) corpus.push_back(sized(GroupSpec::Kind::alt, n));

  for (int p = 2; p <= 100; ++p) {
    for (int q = 2; p * q <= 200; ++q) {
      for (int r = 1; r < p; ++r) {
        if (std::gcd(r, p) != 1) continue;
        long long power = 1;
        for (int j = 0; j < q; ++j) power = (power * r) % p;
        if (power != 1) continue;
        GroupSpec spec;
        spec.kind = GroupSpec::Kind::semidirect;
        spec.p = p;
        spec.q = q;
        spec.r = r;
        corpus.push_back(spec);
      }
    }
  }

  std::vector<GroupSpec> atoms;
  atoms.push_back(sized(GroupSpec::Kind::sym, 3));
  atoms.push_back(sized(GroupSpec::Kind::sym, 4));
  for (int n = 2; n <= 6; ++n) atoms.push_back(sized(GroupSpec::Kind::cyclic, n));
  atoms.push_back(sized(GroupSpec::Kind::dihedral, 4));
  atoms.push_back(sized(GroupSpec::Kind::alt, 4));
  for (size_t i = 0; i < atoms.size(); ++i) {
    for (size_t j = i; j < atoms.size(); ++j) {
      GroupSpec spec;
      spec.kind = GroupSpec::Kind::product;
      spec.factors = {atoms[i], atoms[j]};
      if (predicted_order(spec) <= kDefaultMaxOrder) corpus.push_back(spec);
    }
  }
  return corpus;
}

std::vector<GroupSpec> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<GroupSpec> corpus;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      corpus.push_back(parse_spec(line));
    } catch (const ParseError& e) {
      throw IoError(path + " line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return corpus;
}

std::vector<GroupSpec> resolve_corpus(const std::string& name_or_path) {
  if (name_or_path == "builtin") return builtin_corpus();
  return load_corpus_file(name_or_path);
}

}  // namespace groupkit
