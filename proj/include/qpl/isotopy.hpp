#pragma once

#include <array>
#include <optional>
#include <string>

#include "qpl/parastrophe.hpp"

namespace qpl {

// An ordered triple of bijections (A, B, C) between two quasigroups of the
// same order. It is an isotopism from Q1 to Q2 when
//   mul2(A[x], B[y]) == C[mul1(x, y)]  for all x, y.
struct IsotopismTriple {
  Perm a, b, c;

  int degree() const { return a.degree(); }
  bool is_isomorphism_shape() const { return a == b && b == c; }
};

bool is_isotopism(const IsotopismTriple& t, const Quasigroup& q1,
                  const Quasigroup& q2);

// The isotope image: the unique table q2 with is_isotopism(t, q, q2).
Quasigroup apply_isotopism(const Quasigroup& q, const IsotopismTriple& t);

inline constexpr int kDefaultIsotopySearchOrderBound = 6;

// Exhaustive search over (A, B) in S_n x S_n; C is forced pointwise by
// C[mul1(x, y)] := mul2(A[x], B[y]) and accepted when well defined and
// bijective. Returns the witness with lexicographically least (A, B), or
// nullopt. Throws BoundError above the order bound.
std::optional<IsotopismTriple> find_isotopism(
    const Quasigroup& q1, const Quasigroup& q2,
    int order_bound = kDefaultIsotopySearchOrderBound);

bool is_isomorphism(const Perm& phi, const Quasigroup& q1,
                    const Quasigroup& q2);

// Backtracking over partial images with forced-product propagation; returns
// the lexicographically least isomorphism, or nullopt.
std::optional<Perm> find_isomorphism(const Quasigroup& q1,
                                     const Quasigroup& q2);

// The four explicit triple families relating a quasigroup's associativity
// to isotopy with its division parastrophes:
//   eq1  (R3_s, I, R3_s) : pi1 -> pi5       with R3_s : y -> y\s
//   eq2  (I, R3_s, R3_s) : pi2 -> pi3
//   eq3  (I, L4_s, L4_s) : pi1 -> pi6       with L4_s : y -> s/y
//   eq4  (L4_s, I, L4_s) : pi2 -> pi4
// Each family consists of all isotopisms exactly when the quasigroup is
// associative.
struct FamilyDescriptor {
  std::string_view name;
  ParastropheKind source;
  ParastropheKind target;
};

extern const std::array<FamilyDescriptor, 4> kAssocIsotopyFamilies;

IsotopismTriple assoc_family_triple(const Quasigroup& q, int family, int s);

struct FamilyCheck {
  std::string_view name;
  bool all_isotopisms = true;
  std::optional<int> first_failing_s;
};

struct AssocFamiliesReport {
  std::array<FamilyCheck, 4> families;
  bool associative = false;

  bool all_families_pass() const;
  // all four families all-isotopisms <=> associative
  bool biconditional_ok() const { return all_families_pass() == associative; }
};

AssocFamiliesReport theorem_1_1_check(const Quasigroup& q);

// Isomorphism collapse of an isotopism with a repeated component. For a
// loop G with identity e and an isotopism (A, B, C) : G -> H,
//   C == B:  A is an isomorphism G -> H  <=>  B[e] in right nucleus of H
//   C == A:  B is an isomorphism G -> H  <=>  A[e] in left nucleus of H
struct NucleusCollapseReport {
  std::optional<std::string> precondition_failure;
  bool case_c_equals_b = false;  // otherwise C == A
  bool component_is_isomorphism = false;
  bool nucleus_contains_image = false;

  bool ok() const {
    return !precondition_failure &&
           component_is_isomorphism == nucleus_contains_image;
  }
};

NucleusCollapseReport theorem_0_12_check(const Quasigroup& g,
                                         const Quasigroup& h,
                                         const IsotopismTriple& t);

// Isotopy of all six parastrophes to a common group: if q is isotopic to an
// associative g, every parastrophe of q must be as well.
struct ParastropheIsotopyReport {
  std::optional<std::string> precondition_failure;
  std::array<bool, 6> parastrophe_isotopic{};

  bool all() const;
};

ParastropheIsotopyReport falconer_check(const Quasigroup& q,
                                        const Quasigroup& g);

}  // namespace qpl
