#include "qpl/quasigroup.hpp"

#include <stdexcept>
#include <string>

namespace qpl {

Quasigroup::Quasigroup(int order, std::vector<int> table)
    : order_(order), table_(std::move(table)) {
  if (order_ <= 0) {
    throw std::invalid_argument("Quasigroup: order must be positive");
  }
  const int n = order_;
  if (table_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("Quasigroup: table size does not match order");
  }
  ldiv_.assign(static_cast<std::size_t>(n) * n, -1);
  rdiv_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int z = table_[x * n + y];
      if (z < 0 || z >= n) {
        throw std::invalid_argument("Quasigroup: entry out of range at row " +
                                    std::to_string(x) + ", column " +
                                    std::to_string(y));
      }
      if (ldiv_[x * n + z] != -1) {
        throw std::invalid_argument("Quasigroup: row " + std::to_string(x) +
                                    " repeats symbol " + std::to_string(z));
      }
      if (rdiv_[z * n + y] != -1) {
        throw std::invalid_argument("Quasigroup: column " + std::to_string(y) +
                                    " repeats symbol " + std::to_string(z));
      }
      ldiv_[x * n + z] = y;  // x \ z = y
      rdiv_[z * n + y] = x;  // z / y = x
    }
  }
}

Quasigroup Quasigroup::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("Quasigroup: ragged row in table");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Quasigroup(n, std::move(flat));
}

Quasigroup Quasigroup::cyclic(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) t[x * n + y] = (x + y) % n;
  }
  return Quasigroup(n, std::move(t));
}

Perm Quasigroup::translation(Side side, int x) const {
  std::vector<int> images(order_);
  for (int y = 0; y < order_; ++y) {
    images[y] = side == Side::kLeft ? mul(x, y) : mul(y, x);
  }
  return Perm(std::move(images));
}

std::optional<std::array<int, 3>> Quasigroup::associativity_witness() const {
  const int n = order_;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int xy = mul(x, y);
      for (int z = 0; z < n; ++z) {
        if (mul(xy, z) != mul(x, mul(y, z))) {
          return std::array<int, 3>{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

LoopProfile Quasigroup::loop_profile() const {
  const int n = order_;
  LoopProfile profile;
  for (int a = 0; a < n; ++a) {
    bool left = true;
    bool right = true;
    for (int y = 0; y < n; ++y) {
      left = left && mul(a, y) == y;
      right = right && mul(y, a) == y;
    }
    if (left) profile.left_identities.push_back(a);
    if (right) profile.right_identities.push_back(a);
    if (left && right) profile.identity = a;
  }
  profile.commutative = true;
  for (int x = 0; x < n && profile.commutative; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (mul(x, y) != mul(y, x)) {
        profile.commutative = false;
        break;
      }
    }
  }
  if (profile.identity) {
    profile.exponent_two = true;
    for (int x = 0; x < n; ++x) {
      if (mul(x, x) != *profile.identity) {
        profile.exponent_two = false;
        break;
      }
    }
  }
  return profile;
}

std::vector<int> Quasigroup::nucleus(NucleusKind kind) const {
  const int n = order_;
  std::vector<int> out;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        switch (kind) {
          case NucleusKind::kLeft:
            ok = mul(c, mul(x, y)) == mul(mul(c, x), y);
            break;
          case NucleusKind::kMiddle:
            ok = mul(mul(x, c), y) == mul(x, mul(c, y));
            break;
          case NucleusKind::kRight:
            ok = mul(mul(x, y), c) == mul(x, mul(y, c));
            break;
        }
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

}  // namespace qpl
