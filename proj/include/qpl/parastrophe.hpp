#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qpl/quasigroup.hpp"

namespace qpl {

// The six conjugate operations of a quasigroup (L, theta), each obtained by
// permuting the roles of x, y, z in x theta y = z. The numbering is fixed
// here once and used everywhere (reports, CLI names, composites):
//
//   kPi1:  x pi1 y = z   the operation theta itself
//   kPi2:  y pi2 x = z   transpose               (theta*)
//   kPi3:  x pi3 z = y   left division  x\z      (theta^-1)
//   kPi4:  z pi4 y = x   right division z/y      (^-1 theta)
//   kPi5:  z pi5 x = y   transpose of pi3        ((theta^-1)*)
//   kPi6:  y pi6 z = x   transpose of pi4        ((^-1 theta)*)
enum class ParastropheKind { kPi1, kPi2, kPi3, kPi4, kPi5, kPi6 };

inline constexpr std::array<ParastropheKind, 6> kAllParastrophes = {
    ParastropheKind::kPi1, ParastropheKind::kPi2, ParastropheKind::kPi3,
    ParastropheKind::kPi4, ParastropheKind::kPi5, ParastropheKind::kPi6};

std::string_view to_string(ParastropheKind kind);

// Accepts pi1..pi6 plus the aliases id, star, linv, rinv, linv-star,
// rinv-star.
std::optional<ParastropheKind> parastrophe_from_name(std::string_view name);

// Materializes the conjugate table. The result is again a Latin square;
// kPi1 returns a copy of q.
Quasigroup parastrophe(const Quasigroup& q, ParastropheKind kind);

// One of the twelve translation-map symbols: the left or right translation
// of the given parastrophe.
struct TranslationSymbol {
  ParastropheKind kind;
  Side side;
};

// Translation map of a parastrophe at x, computed directly from the base
// table's divisions without materializing the parastrophe. Always equal to
// parastrophe(q, sym.kind).translation(sym.side, x).
Perm parastrophe_translation(const Quasigroup& q, TranslationSymbol sym,
                             int x);

// One of the ten identities tying parastrophe translations back to the base
// translations. Lk / Rk name the left / right translation of pi_k, so e.g.
// "R2=L1" states that the right translation of the transpose is L_x.
struct LemmaIdentityCheck {
  std::string_view name;
  bool pass = true;
  std::optional<int> first_failing_x;
};

// Evaluates, for every x, the ten identities
//   R2=L1, L2=R1, L3=inv(L1), R4=inv(R1), R5=inv(L1),
//   L6=inv(R1), L3=inv(R2), R4=inv(L2), R5=L3, L6=R4.
// They hold in every quasigroup; a failure would flag a construction bug.
std::array<LemmaIdentityCheck, 10> check_translation_lemma(const Quasigroup& q);

bool all_pass(const std::array<LemmaIdentityCheck, 10>& checks);

struct RemarkCheck {
  std::string_view name;
  bool pass = true;
};

// Loop-ness of the parastrophes relative to the base:
//  - pi2 is a loop exactly when q is;
//  - when q is a loop, pi3 and pi6 have a left identity, pi4 and pi5 a
//    right identity, and each of pi3..pi6 is a loop exactly when q has
//    exponent two.
std::vector<RemarkCheck> remark_profile(const Quasigroup& q);

}  // namespace qpl
