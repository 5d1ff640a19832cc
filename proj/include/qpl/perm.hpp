#pragma once

#include <compare>
#include <vector>

namespace qpl {

// A permutation of {0, .., n-1}.
//
// Maps act on the right throughout this library: p[x] is the image of x,
// and compositions read left to right, so a.then(b) sends x to b[a[x]].
class Perm {
 public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm then(const Perm& next) const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// All of S_n, ordered lexicographically by image tuple (identity first).
std::vector<Perm> all_perms(int degree);

}  // namespace qpl
