#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qpl/isotopy.hpp"
#include "qpl/quasigroup.hpp"

namespace qpl {

enum class TermOp { kMul, kLeftDiv, kRightDiv };

// A term over single-letter variables and the operators * \ /.
struct Term {
  enum class Kind { kVar, kOp };

  Kind kind = Kind::kVar;
  char var = 0;                 // kVar
  TermOp op = TermOp::kMul;     // kOp
  std::vector<Term> children;   // two entries when kOp

  static Term variable(char name);
  static Term binary(TermOp op, Term lhs, Term rhs);

  bool operator==(const Term&) const = default;
  std::string str() const;  // fully parenthesized
  int occurrences(char name) const;
};

// Evaluates t over q under the given variable assignment. Throws
// std::invalid_argument on an unbound variable.
int evaluate_term(const Quasigroup& q, const Term& t,
                  const std::map<char, int>& assignment);

struct IdentityParseError : std::runtime_error {
  std::size_t position;
  IdentityParseError(std::size_t position, const std::string& message);
};

inline constexpr int kMaxIdentityVariables = 6;

// An equation between two terms. The concrete syntax is
//   identity := term "=" term
//   term     := atom { op atom }        op in { * \ / }, left associative
//   atom     := var | "(" term ")" | "[" term "]" | "{" term "}"
// Variables are single lowercase letters; juxtaposition is not multiplication.
// All three bracket shapes group identically (each must close with its own
// shape).
class Identity {
 public:
  static Identity parse(std::string_view text);
  Identity(Term lhs, Term rhs);

  const Term& lhs() const { return lhs_; }
  const Term& rhs() const { return rhs_; }
  const std::vector<char>& variables() const { return vars_; }  // sorted
  std::string str() const;

  // Every variable occurs exactly once on each side.
  bool balanced() const;

  // Lexicographically first failing assignment (values aligned with
  // variables()), or nullopt when the identity holds for all assignments.
  // Enumeration may be split across workers; the reported witness does not
  // depend on the worker count. Throws BoundError for more than
  // kMaxIdentityVariables variables.
  std::optional<std::vector<int>> counterexample(const Quasigroup& q,
                                                 int workers = 1) const;
  bool holds(const Quasigroup& q, int workers = 1) const;

 private:
  void compile();
  int eval_side(const Quasigroup& q, const std::vector<int>& program,
                const int* values) const;

  Term lhs_, rhs_;
  std::vector<char> vars_;
  // postfix programs: entries >= 0 load a variable slot, negative entries
  // apply an operator (-1 *, -2 \, -3 /)
  std::vector<int> lhs_program_, rhs_program_;
};

// Built-in identities: assoc, comm, khalil1 .. khalil6.
const Identity& builtin_identity(std::string_view name);
std::vector<std::string_view> builtin_identity_names();

inline constexpr int kKhalilSuiteOrderBound = 16;

// Whether each of the six five-variable division identities characterizing
// group isotopes holds in q. All six agree on any quasigroup: all true on
// isotopes of groups, all false otherwise.
std::array<bool, 6> khalil_suite(const Quasigroup& q);

// Ten permutations witnessing the generalized associative law
//   [(x P1 * y P2) P3 * z P4] P5 == [x Q1 * (y Q2 * z Q3) Q4] Q5.
struct EvansWitness {
  std::array<Perm, 5> p;
  std::array<Perm, 5> q;
};

bool evans_check(const Quasigroup& q, const EvansWitness& w);

// First failing (x, y, z), if any.
std::optional<std::array<int, 3>> evans_counterexample(const Quasigroup& q,
                                                       const EvansWitness& w);

// Assembles a witness from an isotopism (A, B, C) : G -> Q with G a group:
// P = (A, B, C^-1 A, B, I), Q = (A, A, B, C^-1 B, I).
EvansWitness evans_witness_from_group_isotopy(const IsotopismTriple& t);

inline constexpr int kEvansSearchOrderBound = 3;

// Exhaustive witness search; with both sides composed by the inverse of Q5
// the law is unchanged, so Q5 is fixed to the identity and P5 is forced
// pointwise from the other eight components. Throws BoundError above order
// three.
std::optional<EvansWitness> evans_search(const Quasigroup& q);

// Khalil conditions on the four division parastrophes pi3..pi6 of an
// associative base: all twenty-four checks must come out true.
struct KhalilParastropheReport {
  std::optional<std::string> precondition_failure;
  std::array<std::array<bool, 6>, 4> holds{};  // [pi3, pi4, pi5, pi6]

  bool all() const;
};

KhalilParastropheReport corollary_1_2_check(const Quasigroup& g);

// For an associative base, equality with a division parastrophe is
// equivalent to that parastrophe being associative:
//   part1: pi1 == pi5   part2: pi2 == pi3
//   part3: pi1 == pi6   part4: pi2 == pi4
struct ParastropheEquivCase {
  ParastropheKind source;
  ParastropheKind target;
  bool tables_equal = false;
  bool target_associative = false;

  bool ok() const { return tables_equal == target_associative; }
};

struct ParastropheEquivReport {
  std::optional<std::string> precondition_failure;
  std::array<ParastropheEquivCase, 4> parts{};

  bool all_ok() const;
};

ParastropheEquivReport corollary_1_21_check(const Quasigroup& g);

}  // namespace qpl
