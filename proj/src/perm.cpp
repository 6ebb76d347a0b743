#include "groupkit/perm.hpp"

#include <string>

namespace groupkit {

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images.size());
  for (int i = 0; i < degree(); ++i) inv[images[i]] = i;
  return Perm(std::move(inv));
}

Perm Perm::identity(int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  return Perm(std::move(im));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(degree);
  std::vector<char> seen(degree, 0);
  for (const auto& cycle : cycles) {
    for (size_t i = 0; i < cycle.size(); ++i) {
      int point = cycle[i];
      if (point < 0 || point >= degree) {
        throw ValidationError("cycle point " + std::to_string(point) +
                              " outside degree " + std::to_string(degree));
      }
      if (seen[point]) {
        throw ValidationError("point " + std::to_string(point) +
                              " appears in two cycles");
      }
      seen[point] = 1;
      p.images[point] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw ValidationError("composing permutations of degrees " +
                          std::to_string(a.degree()) + " and " +
                          std::to_string(b.degree()));
  }
  std::vector<int> im(a.images.size());
  for (int i = 0; i < a.degree(); ++i) im[i] = b[a[i]];
  return Perm(std::move(im));
}

void validate_perm(const Perm& p) {
  std::vector<char> hit(p.images.size(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    int image = p[i];
    if (image < 0 || image >= p.degree()) {
      throw ValidationError("image " + std::to_string(image) + " of point " +
                            std::to_string(i) + " outside degree " +
                            std::to_string(p.degree()));
    }
    if (hit[image]) {
      throw ValidationError("image " + std::to_string(image) +
                            " repeated; not a bijection");
    }
    hit[image] = 1;
  }
}

}  // namespace groupkit
