#include "groupkit/groupspec.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "groupkit/errors.hpp"

namespace groupkit {

namespace {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return spec;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void expect(char c, const std::string& context) {
    skip_ws();
    if (at_end() || peek() != c) {
      fail(std::string("expected '") + c + "' " + context);
    }
    advance();
  }

  bool consume(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  int parse_int(const std::string& context) {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected integer " + context);
    }
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000000) fail("integer too large");
      advance();
    }
    return static_cast<int>(value);
  }

  std::string parse_name() {
    skip_ws();
    std::string name;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      name.push_back(peek());
      advance();
    }
    if (name.empty()) {
      fail("expected a constructor name (cyclic, dihedral, dicyclic, sym, alt, "
           "semidirect, perm, table, product)");
    }
    return name;
  }

  GroupSpec parse_spec() {
    std::string name = parse_name();
    if (name == "product") {
      GroupSpec spec;
      spec.kind = GroupSpec::Kind::product;
      expect('(', "after product");
      spec.factors.push_back(parse_spec());
      while (consume(',')) spec.factors.push_back(parse_spec());
      expect(')', "to close product");
      return spec;
    }
    if (name == "semidirect") return parse_semidirect();
    if (name == "perm") return parse_perm();
    if (name == "table") return parse_table();
    return parse_sized_atom(name);
  }

  GroupSpec parse_sized_atom(const std::string& name) {
    GroupSpec spec;
    if (name == "cyclic") {
      spec.kind = GroupSpec::Kind::cyclic;
    } else if (name == "dihedral") {
      spec.kind = GroupSpec::Kind::dihedral;
    } else if (name == "dicyclic") {
      spec.kind = GroupSpec::Kind::dicyclic;
    } else if (name == "sym") {
      spec.kind = GroupSpec::Kind::sym;
    } else if (name == "alt") {
      spec.kind = GroupSpec::Kind::alt;
    } else {
      fail("unknown constructor '" + name +
           "' (expected cyclic, dihedral, dicyclic, sym, alt, semidirect, perm, "
           "table, product)");
    }
    expect('(', "after " + name);
    spec.n = parse_int("for " + name);
    expect(')', "to close " + name);

    if (spec.n < 1) fail(name + " size must be at least 1");
    if (spec.kind == GroupSpec::Kind::dicyclic && spec.n < 2) {
      fail("dicyclic size must be at least 2");
    }
    if ((spec.kind == GroupSpec::Kind::sym || spec.kind == GroupSpec::Kind::alt) &&
        spec.n > 7) {
      fail(name + " degree must be at most 7");
    }
    return spec;
  }

  GroupSpec parse_semidirect() {
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::semidirect;
    expect('(', "after semidirect");
    spec.p = parse_int("for the normal cyclic order");
    expect(',', "between semidirect parameters");
    spec.q = parse_int("for the acting cyclic order");
    expect(',', "between semidirect parameters");
    spec.r = parse_int("for the twist");
    expect(')', "to close semidirect");

    if (spec.p < 1 || spec.q < 1) fail("semidirect orders must be positive");
    int r = spec.r % spec.p;
    if (std::gcd(r, spec.p) != 1) {
      fail("twist " + std::to_string(spec.r) + " not invertible mod " +
           std::to_string(spec.p));
    }
    long long power = 1 % spec.p;
    for (int j = 0; j < spec.q; ++j) power = (power * r) % spec.p;
    if (power != 1 % spec.p) {
      fail("twist " + std::to_string(spec.r) + " has order not dividing " +
           std::to_string(spec.q) + " mod " + std::to_string(spec.p));
    }
    return spec;
  }

  GroupSpec parse_perm() {
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::perm;
    expect('(', "after perm");
    spec.degree = parse_int("for the degree");
    if (spec.degree < 1) fail("degree must be at least 1");
    expect(';', "between degree and cycles");
    spec.cycles.push_back(parse_generator(spec.degree));
    while (consume(',')) spec.cycles.push_back(parse_generator(spec.degree));
    expect(')', "to close perm");
    return spec;
  }

  // One generator: a sequence of parenthesized cycles, 1-based on input and
  // 0-based in the result.
  std::vector<std::vector<int>> parse_generator(int degree) {
    std::vector<std::vector<int>> cycles;
    while (consume('(')) {
      std::vector<int> cycle;
      cycle.push_back(parse_point(degree));
      skip_ws();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        cycle.push_back(parse_point(degree));
        skip_ws();
      }
      expect(')', "to close a cycle");
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  }

  int parse_point(int degree) {
    int point = parse_int("for a cycle point");
    if (point < 1 || point > degree) {
      fail("cycle point " + std::to_string(point) + " outside 1.." +
           std::to_string(degree));
    }
    return point - 1;
  }

  GroupSpec parse_table() {
    GroupSpec spec;
    spec.kind = GroupSpec::Kind::table;
    expect('(', "after table");
    std::string path;
    while (!at_end() && peek() != ')') {
      path.push_back(peek());
      advance();
    }
    expect(')', "to close table");
    while (!path.empty() && std::isspace(static_cast<unsigned char>(path.front()))) {
      path.erase(path.begin());
    }
    while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) {
      path.pop_back();
    }
    if (path.empty()) fail("expected a file path");
    spec.path = path;
    return spec;
  }
};

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_order(long long order, int max_order, const std::string& what) {
  if (order > max_order) {
    throw SizeLimitError(what + " order " + std::to_string(order) +
                         " exceeds max order " + std::to_string(max_order));
  }
}

GroupPtr build_cyclic(int n, int max_order, const std::string& label) {
  require_order(n, max_order, "cyclic");
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) flat[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  return GroupTable::from_flat_trusted(std::move(flat), n, label);
}

// Reflection-rotation pairs (k, i) at index k*n + i; a reflection flips the
// sign of the rotation it passes over.
GroupPtr build_dihedral(int n, int max_order, const std::string& label) {
  int order = 2 * n;
  require_order(order, max_order, "dihedral");
  std::vector<int> flat(static_cast<size_t>(order) * order);
  for (int k1 = 0; k1 < 2; ++k1) {
    for (int i1 = 0; i1 < n; ++i1) {
      for (int k2 = 0; k2 < 2; ++k2) {
        for (int i2 = 0; i2 < n; ++i2) {
          int k = (k1 + k2) % 2;
          int i = ((k2 ? -i1 : i1) + i2 % n + n) % n;
          flat[static_cast<size_t>(k1 * n + i1) * order + (k2 * n + i2)] = k * n + i;
        }
      }
    }
  }
  return GroupTable::from_flat_trusted(std::move(flat), order, label);
}

// Pairs (k, i) with k in {0,1} and a rotation a of order 2n; b^2 = a^n and
// conjugation by b inverts a. Index k*2n + i.
GroupPtr build_dicyclic(int n, int max_order, const std::string& label) {
  int order = 4 * n;
  int rot = 2 * n;
  require_order(order, max_order, "dicyclic");
  std::vector<int> flat(static_cast<size_t>(order) * order);
  for (int k1 = 0; k1 < 2; ++k1) {
    for (int i1 = 0; i1 < rot; ++i1) {
      for (int k2 = 0; k2 < 2; ++k2) {
        for (int i2 = 0; i2 < rot; ++i2) {
          int i = ((k2 ? -i1 : i1) + i2 + (k1 && k2 ? n : 0) + 2 * rot) % rot;
          int k = (k1 + k2) % 2;
          flat[static_cast<size_t>(k1 * rot + i1) * order + (k2 * rot + i2)] =
              k * rot + i;
        }
      }
    }
  }
  return GroupTable::from_flat_trusted(std::move(flat), order, label);
}

GroupPtr build_sym(int n, int max_order, const std::string& label) {
  require_order(factorial(n), max_order, "sym");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<int> full(static_cast<size_t>(n));
    std::iota(full.begin(), full.end(), 0);
    gens.push_back(Perm::from_cycles(n, {full}));
  }
  return GroupTable::from_permutations(n, gens, max_order, label);
}

GroupPtr build_alt(int n, int max_order, const std::string& label) {
  require_order(n >= 2 ? factorial(n) / 2 : 1, max_order, "alt");
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < n; ++i) {
    gens.push_back(Perm::from_cycles(n, {{i, i + 1, i + 2}}));
  }
  return GroupTable::from_permutations(n, gens, max_order, label);
}

}  // namespace

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::cyclic: return "cyclic(" + std::to_string(n) + ")";
    case Kind::dihedral: return "dihedral(" + std::to_string(n) + ")";
    case Kind::dicyclic: return "dicyclic(" + std::to_string(n) + ")";
    case Kind::sym: return "sym(" + std::to_string(n) + ")";
    case Kind::alt: return "alt(" + std::to_string(n) + ")";
    case Kind::semidirect:
      return "semidirect(" + std::to_string(p) + "," + std::to_string(q) + "," +
             std::to_string(r) + ")";
    case Kind::perm: {
      std::string out = "perm(" + std::to_string(degree) + ";";
      for (size_t i = 0; i < cycles.size(); ++i) {
        if (i > 0) out += ",";
        for (const auto& cycle : cycles[i]) {
          out += "(";
          for (size_t j = 0; j < cycle.size(); ++j) {
            if (j > 0) out += " ";
            out += std::to_string(cycle[j] + 1);
          }
          out += ")";
        }
      }
      return out + ")";
    }
    case Kind::table: return "table(" + path + ")";
    case Kind::product: {
      std::string out = "product(";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += ",";
        out += factors[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

GroupSpec parse_spec(const std::string& text) { return SpecParser(text).parse(); }

GroupPtr realize(const GroupSpec& spec, const RealizeOptions& options) {
  const std::string label = spec.to_string();
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      return build_cyclic(spec.n, options.max_order, label);
    case GroupSpec::Kind::dihedral:
      return build_dihedral(spec.n, options.max_order, label);
    case GroupSpec::Kind::dicyclic:
      return build_dicyclic(spec.n, options.max_order, label);
    case GroupSpec::Kind::sym:
      return build_sym(spec.n, options.max_order, label);
    case GroupSpec::Kind::alt:
      return build_alt(spec.n, options.max_order, label);
    case GroupSpec::Kind::semidirect:
      require_order(static_cast<long long>(spec.p) * spec.q, options.max_order,
                    "semidirect");
      return semidirect_cyclic(spec.p, spec.q, spec.r);
    case GroupSpec::Kind::perm: {
      std::vector<Perm> gens;
      gens.reserve(spec.cycles.size());
      for (const auto& generator : spec.cycles) {
        gens.push_back(Perm::from_cycles(spec.degree, generator));
      }
      return GroupTable::from_permutations(spec.degree, gens, options.max_order, label);
    }
    case GroupSpec::Kind::table: {
      TableValidation validation;
      validation.strict = options.strict_assoc;
      GroupPtr g = GroupTable::read_table_file(spec.path, validation);
      if (g->order() > options.max_order) {
        throw SizeLimitError("table order " + std::to_string(g->order()) +
                             " exceeds max order " + std::to_string(options.max_order));
      }
      return g;
    }
    case GroupSpec::Kind::product: {
      if (spec.factors.empty()) throw ParameterError("product of no factors");
      GroupPtr result = realize(spec.factors[0], options);
      for (size_t i = 1; i < spec.factors.size(); ++i) {
        result = direct_product(result, realize(spec.factors[i], options),
                                options.max_order);
      }
      return result;
    }
  }
  throw InternalError("unhandled spec kind");
}

long long predicted_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: return spec.n;
    case GroupSpec::Kind::dihedral: return 2ll * spec.n;
    case GroupSpec::Kind::dicyclic: return 4ll * spec.n;
    case GroupSpec::Kind::sym: return factorial(spec.n);
    case GroupSpec::Kind::alt: return spec.n >= 2 ? factorial(spec.n) / 2 : 1;
    case GroupSpec::Kind::semidirect: return static_cast<long long>(spec.p) * spec.q;
    case GroupSpec::Kind::perm:
    case GroupSpec::Kind::table: return 0;
    case GroupSpec::Kind::product: {
      long long order = 1;
      for (const GroupSpec& factor : spec.factors) {
        long long f = predicted_order(factor);
        if (f == 0) return 0;
        order *= f;
      }
      return order;
    }
  }
  return 0;
}

}  // namespace groupkit
