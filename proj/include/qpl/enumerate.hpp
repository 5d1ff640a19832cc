#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qpl/quasigroup.hpp"

namespace qpl {

// Streams of small Cayley tables:
//   kAllLatin      every Latin square of the order
//   kReducedLatin  first row and first column in natural order
//   kLoops         tables with two-sided identity 0 (same normalization)
//   kGroups        the associative members of kLoops
enum class TableKind { kAllLatin, kReducedLatin, kLoops, kGroups };

std::optional<TableKind> table_kind_from_name(std::string_view name);
std::string_view to_string(TableKind kind);

inline constexpr int kMaxExhaustiveLatinOrder = 5;
inline constexpr int kMaxExhaustiveLoopOrder = 6;
inline constexpr int kMaxGroupOrder = 8;
inline constexpr int kMaxRandomOrder = 32;

// Emits every table of the kind exactly once, in lexicographic row-major
// order. The visitor returns false to stop early. Returns the number of
// tables visited. Throws BoundError above the per-kind order bound.
std::uint64_t enumerate_tables(
    TableKind kind, int order,
    const std::function<bool(const Quasigroup&)>& visit);

std::uint64_t count_tables(TableKind kind, int order);
std::vector<Quasigroup> collect_tables(TableKind kind, int order);

// Small deterministic generator (splitmix64); identical output on every
// platform for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

Perm random_perm(int degree, SplitMix64& rng);

// Seeded row-by-row sampling: each row is completed left to right, trying
// the admissible symbols in an order shuffled by the generator and
// backtracking within the row. A partial Latin rectangle always extends, so
// the construction never restarts. Deterministic in (order, seed).
Quasigroup random_quasigroup(int order, std::uint64_t seed);

}  // namespace qpl
