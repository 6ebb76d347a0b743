#include "groupkit/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "groupkit/errors.hpp"

namespace groupkit {

namespace {

struct ImageHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Row/column bijectivity, identity at 0, and two-sided inverses. Factored
// out so the validated and the trusted construction paths agree on what a
// well-formed table looks like; `trusted` only changes the exception type.
template <class Error>
void check_table_shape(const std::vector<int>& flat, int n) {
  auto at = [&](int a, int b) { return flat[static_cast<size_t>(a) * n + b]; };
  for (int x = 0; x < n; ++x) {
    if (at(0, x) != x || at(x, 0) != x) {
      throw Error("element 0 is not an identity (fails at " + std::to_string(x) + ")");
    }
  }
  std::vector<char> seen(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      int v = at(a, b);
      if (seen[v]) {
        throw Error("row " + std::to_string(a) + " repeats value " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      int v = at(a, b);
      if (seen[v]) {
        throw Error("column " + std::to_string(b) + " repeats value " +
                    std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (int a = 0; a < n; ++a) {
    int right = -1;
    for (int b = 0; b < n; ++b) {
      if (at(a, b) == 0) {
        right = b;
        break;
      }
    }
    if (right < 0 || at(right, a) != 0) {
      throw Error("element " + std::to_string(a) + " has no two-sided inverse");
    }
  }
}

}  // namespace

GroupTable::GroupTable(int order, std::vector<int> flat, std::string label)
    : order_(order), table_(std::move(flat)), label_(std::move(label)) {
  inverse_.resize(order_);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
  elem_order_.resize(order_);
  for (Elem x = 0; x < order_; ++x) {
    int ord = 1;
    Elem y = x;
    while (y != 0) {
      y = mul(y, x);
      ++ord;
    }
    elem_order_[x] = ord;
  }
}

int GroupTable::element_order(Elem x) const {
  check_element(x);
  return elem_order_[x];
}

Elem GroupTable::power(Elem x, long long e) const {
  check_element(x);
  int m = elem_order_[x];
  int k = static_cast<int>(((e % m) + m) % m);
  Elem result = 0;
  Elem base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem GroupTable::conjugate(Elem x, Elem g) const {
  check_element(x);
  check_element(g);
  return mul(mul(inverse_[g], x), g);
}

Elem GroupTable::commutator(Elem x, Elem y) const {
  check_element(x);
  check_element(y);
  return mul(mul(inverse_[x], inverse_[y]), mul(x, y));
}

bool GroupTable::is_abelian() const {
  for (Elem a = 1; a < order_; ++a) {
    for (Elem b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

Perm GroupTable::regular_perm(Elem x) const {
  check_element(x);
  std::vector<int> images(static_cast<size_t>(order_));
  for (Elem g = 0; g < order_; ++g) images[g] = mul(g, x);
  return Perm(std::move(images));
}

void GroupTable::check_element(Elem x) const {
  if (x < 0 || x >= order_) {
    throw ParameterError("element index " + std::to_string(x) +
                         " outside group of order " + std::to_string(order_));
  }
}

GroupPtr GroupTable::from_permutations(int degree, const std::vector<Perm>& generators,
                                       int max_order, std::string label) {
  if (degree < 0) throw ParameterError("negative degree");
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw ValidationError("generator degree " + std::to_string(g.degree()) +
                            " does not match " + std::to_string(degree));
    }
    validate_perm(g);
  }

  std::vector<Perm> elements{Perm::identity(degree)};
  std::unordered_map<std::vector<int>, int, ImageHash> index;
  index.emplace(elements[0].images, 0);
  for (size_t front = 0; front < elements.size(); ++front) {
    // elements grows while we walk it; re-index rather than hold a reference
    for (const Perm& g : generators) {
      Perm next = compose(elements[front], g);
      if (index.emplace(next.images, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (static_cast<int>(elements.size()) > max_order) {
          throw SizeLimitError("closure exceeds max order " + std::to_string(max_order));
        }
      }
    }
  }

  int n = static_cast<int>(elements.size());
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      flat[static_cast<size_t>(a) * n + b] = index.at(compose(elements[a], elements[b]).images);
    }
  }
  return from_flat_trusted(std::move(flat), n, std::move(label));
}

GroupPtr GroupTable::from_table(const std::vector<std::vector<int>>& matrix,
                                const TableValidation& validation, std::string label) {
  int n = static_cast<int>(matrix.size());
  if (n == 0) throw ValidationError("empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(matrix[a].size()) != n) {
      throw ValidationError("row " + std::to_string(a) + " has " +
                            std::to_string(matrix[a].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (int b = 0; b < n; ++b) {
      int v = matrix[a][b];
      if (v < 0 || v >= n) {
        throw ValidationError("entry " + std::to_string(v) + " at (" +
                              std::to_string(a) + ", " + std::to_string(b) +
                              ") outside [0, " + std::to_string(n) + ")");
      }
    }
  }

  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = matrix[cand][x] == x && matrix[x][cand] == x;
    }
    if (ok) e = cand;
  }
  if (e < 0) throw ValidationError("no identity element");

  // Swap labels 0 and e so the identity lands at index 0.
  auto relabel = [e](int x) { return x == 0 ? e : x == e ? 0 : x; };
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      flat[static_cast<size_t>(a) * n + b] = relabel(matrix[relabel(a)][relabel(b)]);
    }
  }

  check_table_shape<ValidationError>(flat, n);

  auto at = [&](int a, int b) { return flat[static_cast<size_t>(a) * n + b]; };
  auto check_triple = [&](int a, int b, int c) {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      throw ValidationError("associativity fails at (" + std::to_string(a) + ", " +
                            std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  };
  if (validation.strict || n <= validation.exhaustive_limit) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
      }
    }
  } else {
    std::mt19937 rng(12345);
    for (long long i = 0; i < validation.sample_count; ++i) {
      int a = static_cast<int>(rng() % static_cast<unsigned>(n));
      int b = static_cast<int>(rng() % static_cast<unsigned>(n));
      int c = static_cast<int>(rng() % static_cast<unsigned>(n));
      check_triple(a, b, c);
    }
  }

  return GroupPtr(new GroupTable(n, std::move(flat), std::move(label)));
}

GroupPtr GroupTable::read_table_file(const std::string& path,
                                     const TableValidation& validation) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  std::vector<int> numbers;
  std::string line;
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    int v;
    while (row >> v) numbers.push_back(v);
    if (!row.eof()) {
      throw ValidationError(path + ": non-numeric token in line '" + line + "'");
    }
  }
  if (numbers.empty()) throw ValidationError(path + ": no data");
  long long n = numbers[0];
  if (n < 1 || static_cast<long long>(numbers.size()) != 1 + n * n) {
    throw ValidationError(path + ": expected " + std::to_string(n * n) +
                          " entries for order " + std::to_string(n) + ", found " +
                          std::to_string(numbers.size() - 1));
  }
  std::vector<std::vector<int>> matrix(static_cast<size_t>(n));
  for (long long a = 0; a < n; ++a) {
    matrix[a].assign(numbers.begin() + 1 + a * n, numbers.begin() + 1 + (a + 1) * n);
  }
  return from_table(matrix, validation, path);
}

GroupPtr GroupTable::from_flat_trusted(std::vector<int> flat, int order,
                                       std::string label) {
  if (order < 1 || flat.size() != static_cast<size_t>(order) * order) {
    throw InternalError("trusted table has wrong shape");
  }
  for (int v : flat) {
    if (v < 0 || v >= order) throw InternalError("trusted table entry out of range");
  }
  check_table_shape<InternalError>(flat, order);
  return GroupPtr(new GroupTable(order, std::move(flat), std::move(label)));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, int max_order) {
  long long total = static_cast<long long>(g->order()) * h->order();
  if (total > max_order) {
    throw SizeLimitError("product order " + std::to_string(total) + " exceeds max order " +
                         std::to_string(max_order));
  }
  int n = static_cast<int>(total);
  int hn = h->order();
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int prod_g = g->mul(a / hn, b / hn);
      int prod_h = h->mul(a % hn, b % hn);
      flat[static_cast<size_t>(a) * n + b] = prod_g * hn + prod_h;
    }
  }
  return GroupTable::from_flat_trusted(std::move(flat), n,
                                       g->label() + "x" + h->label());
}

GroupPtr semidirect_cyclic(int p, int q, int r) {
  if (p < 1 || q < 1) throw ParameterError("semidirect orders must be positive");
  long long total = static_cast<long long>(p) * q;
  if (total > 46340) {
    throw SizeLimitError("semidirect order " + std::to_string(total) + " is too large");
  }
  r = ((r % p) + p) % p;
  if (std::gcd(r, p) != 1) {
    throw ParameterError("twist " + std::to_string(r) + " not invertible mod " +
                         std::to_string(p));
  }
  // r^q must be 1 mod p for b^q = 1 to be consistent with b^-1 a b = a^r.
  std::vector<int> rpow(static_cast<size_t>(q) + 1);
  rpow[0] = 1 % p;
  for (int j = 1; j <= q; ++j) {
    rpow[j] = static_cast<int>((static_cast<long long>(rpow[j - 1]) * r) % p);
  }
  if (rpow[q] != 1 % p) {
    throw ParameterError("twist " + std::to_string(r) + " has order not dividing " +
                         std::to_string(q) + " mod " + std::to_string(p));
  }

  // Element a^i b^j sits at index i*q + j; moving a across b^j twists by
  // r^-j = r^(q-j).
  int n = static_cast<int>(total);
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i1 = 0; i1 < p; ++i1) {
    for (int j1 = 0; j1 < q; ++j1) {
      for (int i2 = 0; i2 < p; ++i2) {
        for (int j2 = 0; j2 < q; ++j2) {
          int twist = rpow[(q - j1) % q];
          int i = static_cast<int>((i1 + static_cast<long long>(i2) * twist) % p);
          int j = (j1 + j2) % q;
          flat[static_cast<size_t>(i1 * q + j1) * n + (i2 * q + j2)] = i * q + j;
        }
      }
    }
  }
  std::string label = "semidirect(" + std::to_string(p) + "," + std::to_string(q) + "," +
                      std::to_string(r) + ")";
  return GroupTable::from_flat_trusted(std::move(flat), n, std::move(label));
}

bool GroupHom::is_homomorphism() const {
  if (!source || !target) return false;
  if (static_cast<int>(map.size()) != source->order()) return false;
  for (Elem image : map) {
    if (image < 0 || image >= target->order()) return false;
  }
  for (Elem a = 0; a < source->order(); ++a) {
    for (Elem b = 0; b < source->order(); ++b) {
      if (target->mul(map[a], map[b]) != map[source->mul(a, b)]) return false;
    }
  }
  return true;
}

}  // namespace groupkit
