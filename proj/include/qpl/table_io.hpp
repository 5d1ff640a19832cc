#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qpl/identity.hpp"
#include "qpl/quasigroup.hpp"

namespace qpl {

// Text format for Cayley tables:
//   - lines whose first non-blank character is '#' are comments
//   - the first remaining line holds the order n
//   - n body lines follow, each with n whitespace-separated integers in
//     [0, n)
// The canonical form written by format_table has no comments and single
// spaces.
struct TableParseError : std::runtime_error {
  int line;
  int column;
  TableParseError(int line, int column, const std::string& message);
};

Quasigroup read_table(std::istream& in);
Quasigroup read_table_text(const std::string& text);
Quasigroup read_table_file(const std::string& path);

std::string format_table(const Quasigroup& q);
std::string format_perm(const Perm& p);

// Witness files hold ten permutation lines (P1..P5 then Q1..Q5), each with
// `degree` images; comment lines are allowed as in tables.
EvansWitness read_evans_witness(std::istream& in, int degree);
EvansWitness read_evans_witness_file(const std::string& path, int degree);

}  // namespace qpl
