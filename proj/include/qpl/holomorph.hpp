#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qpl/parastrophe.hpp"

namespace qpl {

inline constexpr int kDefaultAutSearchOrderBound = 8;

// All automorphisms of q, in lexicographic order by image tuple. The
// identity map is always first. Throws BoundError above the order bound.
std::vector<Perm> automorphism_group(
    const Quasigroup& q, int order_bound = kDefaultAutSearchOrderBound);

inline constexpr int kDefaultHolomorphBound = 200;

// The quasigroup on Aut(q) x q with
//   (alpha, x) o (beta, y) = (alpha beta, (x beta) * y),
// where alpha beta composes left to right. Elements are flat-coded as
// aut_index * order + point, with Aut canonically ordered as in
// automorphism_group. Throws BoundError when |Aut| * order > max_elements.
Quasigroup holomorph(const Quasigroup& q,
                     int max_elements = kDefaultHolomorphBound);

// For each parastrophe kind k in pi2..pi6, compares the k-parastrophe of
// the holomorph of q with the prescribed re-parastrophe of the holomorph of
// the k-parastrophe of q:
//   pi2 case: pi2 of it       pi3 case: pi3 of it     pi4 case: pi4 of it
//   pi5 case: pi3 then pi2    pi6 case: pi4 then pi2
// Tables agree exactly when q equals its own k-parastrophe.
struct HolomorphCase {
  ParastropheKind kind;
  bool holomorph_sides_equal = false;
  bool base_sides_equal = false;

  bool ok() const { return holomorph_sides_equal == base_sides_equal; }
};

std::array<HolomorphCase, 5> theorem_2_5_check(
    const Quasigroup& q, int max_elements = kDefaultHolomorphBound);

// Specialization to an associative base: for k in pi3..pi6 the starred
// holomorph comparison holds exactly when the k-parastrophe itself is
// associative. The comparison routes pi3 and pi5 through pi3-then-pi2 and
// pi4 and pi6 through pi4-then-pi2, applied to both members.
struct HolomorphAssocCase {
  ParastropheKind kind;
  bool holomorph_sides_equal = false;
  bool parastrophe_associative = false;

  bool ok() const { return holomorph_sides_equal == parastrophe_associative; }
};

struct HolomorphAssocReport {
  std::optional<std::string> precondition_failure;
  std::array<HolomorphAssocCase, 4> cases{};

  bool all_ok() const;
};

HolomorphAssocReport corollary_2_6_check(
    const Quasigroup& g, int max_elements = kDefaultHolomorphBound);

}  // namespace qpl
