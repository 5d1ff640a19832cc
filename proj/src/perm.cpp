#include "qpl/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qpl {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("Perm: images are not a bijection");
    }
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
  return Perm(std::move(inv));
}

Perm Perm::then(const Perm& next) const {
  if (next.degree() != degree()) {
    throw std::invalid_argument("Perm::then: degree mismatch");
  }
  std::vector<int> out(images_.size());
  for (int x = 0; x < degree(); ++x) out[x] = next.images_[images_[x]];
  return Perm(std::move(out));
}

std::vector<Perm> all_perms(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace qpl
