#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qpl/perm.hpp"

namespace qpl {

enum class Side { kLeft, kRight };
enum class NucleusKind { kLeft, kMiddle, kRight };

struct LoopProfile {
  std::optional<int> identity;  // two-sided identity element, if any
  std::vector<int> left_identities;
  std::vector<int> right_identities;
  bool commutative = false;
  bool exponent_two = false;  // loop with x*x = e for every x

  bool is_loop() const { return identity.has_value(); }
};

// A finite quasigroup given by its Cayley table, i.e. a Latin square on
// {0, .., n-1}. table(x, y) is the product x*y; row x is the left
// translation L_x and column y is the right translation R_y. The
// constructor rejects tables that are not Latin. Instances are immutable
// and safe to share across threads.
class Quasigroup {
 public:
  Quasigroup(int order, std::vector<int> table);  // row-major, length n*n
  static Quasigroup from_rows(const std::vector<std::vector<int>>& rows);
  static Quasigroup cyclic(int n);  // x*y = (x + y) mod n

  int order() const { return order_; }
  int mul(int x, int y) const { return table_[x * order_ + y]; }

  // kLeft solves a*y = b for y (written a\b); kRight solves x*b = a (a/b).
  int divide(Side side, int a, int b) const {
    return side == Side::kLeft ? ldiv_[a * order_ + b] : rdiv_[a * order_ + b];
  }

  // kLeft gives L_x : y -> x*y; kRight gives R_x : y -> y*x.
  Perm translation(Side side, int x) const;

  // Lexicographically first (x, y, z) with (x*y)*z != x*(y*z), if any.
  std::optional<std::array<int, 3>> associativity_witness() const;
  bool is_associative() const { return !associativity_witness().has_value(); }

  LoopProfile loop_profile() const;

  // Elements associating with all pairs in the indicated slot. Defined for
  // arbitrary quasigroups; may be empty when there is no identity element.
  std::vector<int> nucleus(NucleusKind kind) const;

  const std::vector<int>& table() const { return table_; }

  friend bool operator==(const Quasigroup& a, const Quasigroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  int order_;
  std::vector<int> table_;
  std::vector<int> ldiv_;  // ldiv_[a*n+b] = a\b
  std::vector<int> rdiv_;  // rdiv_[a*n+b] = a/b
};

}  // namespace qpl
