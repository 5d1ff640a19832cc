#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qpl/holomorph.hpp"

namespace qpl {

struct SuiteOptions {
  int max_order = -1;           // -1 selects the per-suite default
  std::uint64_t seed = 1;       // base seed for sampled instances
  int sample = -1;              // sampled-instance count, -1 for default
  int workers = 1;
  int holomorph_bound = kDefaultHolomorphBound;
};

// One checked claim on one instance. Both sides of the claimed equivalence
// are evaluated independently; the record is ok when they agree.
struct SuiteRecord {
  std::string claim;     // e.g. "thm1.1/eq1"
  std::string instance;  // e.g. "o3#7"
  bool lhs = false;
  bool rhs = false;

  bool ok() const { return lhs == rhs; }
};

struct SuiteFinding {
  std::string instance;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  bool probe = false;  // probe suites report findings and never fail
  std::uint64_t instances = 0;
  std::vector<SuiteRecord> records;
  std::vector<SuiteFinding> findings;

  std::uint64_t failures() const;
  bool all_ok() const { return failures() == 0; }
  int exit_status() const { return probe || all_ok() ? 0 : 1; }

  // Line-delimited records, probe findings, then one summary line.
  void write(std::ostream& out) const;
  std::string str() const;
};

// Suite names understood by run_suite:
//   lemma0.1             translation-map identities on every square
//   thm0.1.2             all-six division identities <=> group isotope
//   thm0.1.3             parastrophes of group isotopes stay isotopic
//   thm0.12              nucleus criterion for isomorphism collapse
//   thm1.1               four isotopism families <=> associativity
//   probe-1.1-converse   counterexample search for the broad converse
//   cor1.2               division identities on parastrophes of groups
//   cor1.14              isotopy-isomorphy via the nucleus criterion
//   cor1.21              parastrophe equality <=> parastrophe associativity
//   thm2.5               holomorph/parastrophe interchange
//   cor2.6               holomorph interchange over associative bases
std::vector<std::string_view> suite_names();

SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace qpl
