#include "qpl/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qpl/errors.hpp"

namespace qpl {

std::optional<TableKind> table_kind_from_name(std::string_view name) {
  if (name == "all_latin") return TableKind::kAllLatin;
  if (name == "reduced_latin") return TableKind::kReducedLatin;
  if (name == "loops") return TableKind::kLoops;
  if (name == "groups") return TableKind::kGroups;
  return std::nullopt;
}

std::string_view to_string(TableKind kind) {
  switch (kind) {
    case TableKind::kAllLatin: return "all_latin";
    case TableKind::kReducedLatin: return "reduced_latin";
    case TableKind::kLoops: return "loops";
    case TableKind::kGroups: return "groups";
  }
  return "?";
}

namespace {

// Row-wise backtracking with column bitmasks, filling cells in row-major
// order and trying symbols in ascending order, so tables come out in
// lexicographic order. In normalized mode row 0 and column 0 are pinned to
// the natural order. With associativity pruning on, partial tables with a
// fully determined violated triple are cut; this keeps the group stream
// enumerable at orders where the raw loop stream is astronomically large.
class LatinGenerator {
 public:
  LatinGenerator(int n, bool normalized,
                 const std::function<bool(const Quasigroup&)>& visit,
                 bool prune_non_associative = false)
      : n_(n),
        normalized_(normalized),
        prune_non_associative_(prune_non_associative),
        visit_(visit),
        cells_(static_cast<std::size_t>(n) * n, -1),
        col_mask_(n, 0u) {}

  std::uint64_t run() {
    if (normalized_) {
      for (int y = 0; y < n_; ++y) place(0, y, y);
      for (int x = 1; x < n_; ++x) place(x, 0, x);
      fill_from(1, 1);
    } else {
      fill_from(0, 0);
    }
    return count_;
  }

 private:
  void place(int x, int y, int v) {
    cells_[x * n_ + y] = v;
    col_mask_[y] |= 1u << v;
  }

  void remove(int x, int y) {
    col_mask_[y] &= ~(1u << cells_[x * n_ + y]);
    cells_[x * n_ + y] = -1;
  }

  void fill_from(int x, int y) {
    if (stop_) return;
    while (x < n_ && cells_[x * n_ + y] != -1) {
      if (++y == n_) {
        y = 0;
        ++x;
      }
    }
    if (x == n_) {
      ++count_;
      if (!visit_(Quasigroup(n_, cells_))) stop_ = true;
      return;
    }
    std::uint32_t row_mask = 0;
    for (int c = 0; c < n_; ++c) {
      if (cells_[x * n_ + c] != -1) row_mask |= 1u << cells_[x * n_ + c];
    }
    const std::uint32_t full = (n_ == 32) ? ~0u : (1u << n_) - 1u;
    std::uint32_t avail = full & ~(row_mask | col_mask_[y]);
    while (avail != 0 && !stop_) {
      const int v = std::countr_zero(avail);
      avail &= avail - 1;
      place(x, y, v);
      if (!prune_non_associative_ || partial_associativity_ok()) {
        int nx = x, ny = y + 1;
        if (ny == n_) {
          ny = 0;
          ++nx;
        }
        fill_from(nx, ny);
      }
      remove(x, y);
    }
  }

  // No triple with all four needed products filled in may violate
  // associativity.
  bool partial_associativity_ok() const {
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        const int xy = cells_[x * n_ + y];
        if (xy == -1) continue;
        for (int z = 0; z < n_; ++z) {
          const int yz = cells_[y * n_ + z];
          if (yz == -1) continue;
          const int left = cells_[xy * n_ + z];
          const int right = cells_[x * n_ + yz];
          if (left != -1 && right != -1 && left != right) return false;
        }
      }
    }
    return true;
  }

  int n_;
  bool normalized_;
  bool prune_non_associative_;
  const std::function<bool(const Quasigroup&)>& visit_;
  std::vector<int> cells_;
  std::vector<std::uint32_t> col_mask_;
  std::uint64_t count_ = 0;
  bool stop_ = false;
};

}  // namespace

std::uint64_t enumerate_tables(
    TableKind kind, int order,
    const std::function<bool(const Quasigroup&)>& visit) {
  if (order < 1) throw BoundError("enumerate_tables: order must be >= 1");
  const int bound = kind == TableKind::kAllLatin ? kMaxExhaustiveLatinOrder
                    : kind == TableKind::kGroups ? kMaxGroupOrder
                                                 : kMaxExhaustiveLoopOrder;
  if (order > bound) {
    throw BoundError("enumerate_tables: order " + std::to_string(order) +
                     " exceeds bound " + std::to_string(bound) + " for kind " +
                     std::string(to_string(kind)));
  }
  if (kind == TableKind::kGroups) {
    std::uint64_t emitted = 0;
    LatinGenerator gen(
        order, true,
        [&](const Quasigroup& q) {
          if (!q.is_associative()) return true;
          ++emitted;
          return visit(q);
        },
        /*prune_non_associative=*/true);
    gen.run();
    return emitted;
  }
  LatinGenerator gen(order, kind != TableKind::kAllLatin, visit);
  return gen.run();
}

std::uint64_t count_tables(TableKind kind, int order) {
  return enumerate_tables(kind, order, [](const Quasigroup&) { return true; });
}

std::vector<Quasigroup> collect_tables(TableKind kind, int order) {
  std::vector<Quasigroup> out;
  enumerate_tables(kind, order, [&](const Quasigroup& q) {
    out.push_back(q);
    return true;
  });
  return out;
}

Perm random_perm(int degree, SplitMix64& rng) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  for (int i = degree - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(images[i], images[j]);
  }
  return Perm(std::move(images));
}

namespace {

bool fill_row_random(int n, int row, std::vector<int>& cells,
                     std::vector<std::uint32_t>& col_mask, int y,
                     std::uint32_t row_mask, SplitMix64& rng) {
  if (y == n) return true;
  const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1u;
  std::uint32_t avail = full & ~(row_mask | col_mask[y]);
  std::vector<int> candidates;
  while (avail != 0) {
    candidates.push_back(std::countr_zero(avail));
    avail &= avail - 1;
  }
  for (std::size_t i = candidates.size(); i > 1; --i) {
    std::swap(candidates[i - 1], candidates[rng.below(i)]);
  }
  for (int v : candidates) {
    cells[row * n + y] = v;
    col_mask[y] |= 1u << v;
    if (fill_row_random(n, row, cells, col_mask, y + 1, row_mask | (1u << v),
                        rng)) {
      return true;
    }
    col_mask[y] &= ~(1u << v);
  }
  return false;
}

}  // namespace

Quasigroup random_quasigroup(int order, std::uint64_t seed) {
  if (order < 1 || order > kMaxRandomOrder) {
    throw BoundError("random_quasigroup: order out of range");
  }
  SplitMix64 rng(seed);
  std::vector<int> cells(static_cast<std::size_t>(order) * order, -1);
  std::vector<std::uint32_t> col_mask(order, 0u);
  for (int row = 0; row < order; ++row) {
    fill_row_random(order, row, cells, col_mask, 0, 0u, rng);
  }
  return Quasigroup(order, std::move(cells));
}

}  // namespace qpl
