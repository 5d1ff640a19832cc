// qpl - command-line front end for the quasigroup toolkit.
//
// Exit codes: 0 pass/holds/found, 1 legitimate negative verdict,
// 2 input error, 3 resource bound exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpl/enumerate.hpp"
#include "qpl/errors.hpp"
#include "qpl/holomorph.hpp"
#include "qpl/identity.hpp"
#include "qpl/isotopy.hpp"
#include "qpl/parallel.hpp"
#include "qpl/parastrophe.hpp"
#include "qpl/suites.hpp"
#include "qpl/table_io.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBound = 3;

std::string format_element_set(const std::vector<int>& elements) {
  if (elements.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(elements[i]);
  }
  return out;
}

int cmd_table_validate(const std::string& path) {
  const qpl::Quasigroup q = qpl::read_table_file(path);
  std::string line = "ok, order " + std::to_string(q.order());
  const qpl::LoopProfile profile = q.loop_profile();
  if (profile.is_loop()) {
    line += ", loop";
  } else {
    line += ", quasigroup";
  }
  if (q.is_associative()) line += ", group";
  std::cout << line << '\n';
  return kExitHolds;
}

int cmd_table_parastrophe(const std::string& path, const std::string& kind) {
  const auto parsed = qpl::parastrophe_from_name(kind);
  if (!parsed) {
    std::cerr << "error: unknown parastrophe kind '" << kind << "'\n";
    return kExitInputError;
  }
  const qpl::Quasigroup q = qpl::read_table_file(path);
  std::cout << qpl::format_table(qpl::parastrophe(q, *parsed));
  return kExitHolds;
}

int cmd_table_holomorph(const std::string& path, int bound) {
  const qpl::Quasigroup q = qpl::read_table_file(path);
  std::cout << qpl::format_table(qpl::holomorph(q, bound));
  return kExitHolds;
}

int cmd_table_automorphisms(const std::string& path) {
  const qpl::Quasigroup q = qpl::read_table_file(path);
  const std::vector<qpl::Perm> auts = qpl::automorphism_group(q);
  std::cout << auts.size() << '\n';
  for (const qpl::Perm& p : auts) {
    std::cout << qpl::format_perm(p) << '\n';
  }
  return kExitHolds;
}

int cmd_table_nuclei(const std::string& path) {
  const qpl::Quasigroup q = qpl::read_table_file(path);
  std::cout << "left: "
            << format_element_set(q.nucleus(qpl::NucleusKind::kLeft)) << '\n'
            << "middle: "
            << format_element_set(q.nucleus(qpl::NucleusKind::kMiddle)) << '\n'
            << "right: "
            << format_element_set(q.nucleus(qpl::NucleusKind::kRight)) << '\n';
  return kExitHolds;
}

int cmd_table_profile(const std::string& path) {
  const qpl::Quasigroup q = qpl::read_table_file(path);
  const qpl::LoopProfile p = q.loop_profile();
  std::cout << "order: " << q.order() << '\n';
  std::cout << "identity: "
            << (p.identity ? std::to_string(*p.identity) : std::string("-"))
            << '\n';
  std::cout << "left-identities: " << format_element_set(p.left_identities)
            << '\n';
  std::cout << "right-identities: " << format_element_set(p.right_identities)
            << '\n';
  std::cout << "commutative: " << (p.commutative ? "yes" : "no") << '\n';
  std::cout << "exponent-two: " << (p.exponent_two ? "yes" : "no") << '\n';
  std::cout << "associative: " << (q.is_associative() ? "yes" : "no") << '\n';
  return kExitHolds;
}

int cmd_check_identity(const std::string& path, const std::string& name,
                       const std::string& expr, int workers) {
  const qpl::Quasigroup q = qpl::read_table_file(path);
  const qpl::Identity* identity = nullptr;
  qpl::Identity parsed = qpl::Identity::parse("x=x");
  std::string label;
  if (!name.empty()) {
    identity = &qpl::builtin_identity(name);
    label = name;
  } else {
    parsed = qpl::Identity::parse(expr);
    identity = &parsed;
    label = parsed.str();
  }
  const auto witness = identity->counterexample(q, workers);
  if (!witness) {
    std::cout << "identity " << label << ": holds\n";
    return kExitHolds;
  }
  std::cout << "identity " << label << ": fails at";
  const std::vector<char>& vars = identity->variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::cout << ' ' << vars[i] << '=' << (*witness)[i];
  }
  std::cout << '\n';
  return kExitNegative;
}

int cmd_check_isotopic(const std::string& path_a, const std::string& path_b) {
  const qpl::Quasigroup a = qpl::read_table_file(path_a);
  const qpl::Quasigroup b = qpl::read_table_file(path_b);
  const auto triple = qpl::find_isotopism(a, b);
  if (!triple) {
    std::cout << "not isotopic\n";
    return kExitNegative;
  }
  std::cout << "isotopic\n";
  std::cout << "A: " << qpl::format_perm(triple->a) << '\n';
  std::cout << "B: " << qpl::format_perm(triple->b) << '\n';
  std::cout << "C: " << qpl::format_perm(triple->c) << '\n';
  return kExitHolds;
}

int cmd_check_isomorphic(const std::string& path_a,
                         const std::string& path_b) {
  const qpl::Quasigroup a = qpl::read_table_file(path_a);
  const qpl::Quasigroup b = qpl::read_table_file(path_b);
  const auto phi = qpl::find_isomorphism(a, b);
  if (!phi) {
    std::cout << "not isomorphic\n";
    return kExitNegative;
  }
  std::cout << "isomorphic\n";
  std::cout << "phi: " << qpl::format_perm(*phi) << '\n';
  return kExitHolds;
}

int cmd_check_khalil(const std::string& path) {
  const qpl::Quasigroup q = qpl::read_table_file(path);
  const std::array<bool, 6> verdicts = qpl::khalil_suite(q);
  bool all = true;
  for (int i = 0; i < 6; ++i) {
    std::cout << "khalil" << (i + 1) << ": "
              << (verdicts[i] ? "holds" : "fails") << '\n';
    all = all && verdicts[i];
  }
  return all ? kExitHolds : kExitNegative;
}

int cmd_check_evans(const std::string& path, const std::string& witness_path,
                    bool search) {
  const qpl::Quasigroup q = qpl::read_table_file(path);
  if (search) {
    const auto witness = qpl::evans_search(q);
    if (!witness) {
      std::cout << "no evans witness\n";
      return kExitNegative;
    }
    std::cout << "evans witness found\n";
    for (int i = 0; i < 5; ++i) {
      std::cout << "P" << (i + 1) << ": " << qpl::format_perm(witness->p[i])
                << '\n';
    }
    for (int i = 0; i < 5; ++i) {
      std::cout << "Q" << (i + 1) << ": " << qpl::format_perm(witness->q[i])
                << '\n';
    }
    return kExitHolds;
  }
  const qpl::EvansWitness witness =
      qpl::read_evans_witness_file(witness_path, q.order());
  const auto failure = qpl::evans_counterexample(q, witness);
  if (!failure) {
    std::cout << "evans law: holds\n";
    return kExitHolds;
  }
  std::cout << "evans law: fails at x=" << (*failure)[0]
            << " y=" << (*failure)[1] << " z=" << (*failure)[2] << '\n';
  return kExitNegative;
}

int cmd_enum(const std::string& kind_name, int order, long long limit,
             bool count_only, std::optional<std::uint64_t> seed) {
  if (seed) {
    if (kind_name != "all_latin") {
      std::cerr << "error: --seed sampling is only defined for all_latin\n";
      return kExitInputError;
    }
    const long long n = limit < 0 ? 1 : limit;
    for (long long i = 0; i < n; ++i) {
      const qpl::Quasigroup q =
          qpl::random_quasigroup(order, *seed + static_cast<std::uint64_t>(i));
      if (i > 0) std::cout << '\n';
      std::cout << qpl::format_table(q);
    }
    return kExitHolds;
  }
  const auto kind = qpl::table_kind_from_name(kind_name);
  if (!kind) {
    std::cerr << "error: unknown kind '" << kind_name << "'\n";
    return kExitInputError;
  }
  if (count_only) {
    std::cout << qpl::count_tables(*kind, order) << '\n';
    return kExitHolds;
  }
  long long emitted = 0;
  qpl::enumerate_tables(*kind, order, [&](const qpl::Quasigroup& q) {
    if (limit >= 0 && emitted >= limit) return false;
    if (emitted > 0) std::cout << '\n';
    std::cout << qpl::format_table(q);
    ++emitted;
    return true;
  });
  return kExitHolds;
}

int cmd_verify(const std::string& suite, const qpl::SuiteOptions& options,
               const std::string& report_path) {
  const qpl::SuiteReport report = qpl::run_suite(suite, options);
  if (report_path.empty()) {
    report.write(std::cout);
  } else {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write '" << report_path << "'\n";
      return kExitInputError;
    }
    report.write(out);
    std::cout << "summary suite=" << report.suite
              << " instances=" << report.instances
              << " failures=" << report.failures() << '\n';
  }
  return report.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quasigroup toolkit: parastrophes, isotopisms, "
               "holomorphs, identity checking"};
  app.require_subcommand(1);

  // table ------------------------------------------------------------
  CLI::App* table = app.add_subcommand("table", "inspect or transform tables");
  table->require_subcommand(1);
  std::string table_path;
  std::string parastrophe_kind = "pi1";
  int holomorph_bound = qpl::kDefaultHolomorphBound;

  CLI::App* validate = table->add_subcommand("validate", "check a table file");
  validate->add_option("file", table_path)->required();

  CLI::App* par = table->add_subcommand("parastrophe", "write a conjugate");
  par->add_option("--kind", parastrophe_kind,
                  "pi1..pi6 (aliases: id, star, linv, rinv, linv-star, "
                  "rinv-star)")
      ->required();
  par->add_option("file", table_path)->required();

  CLI::App* hol = table->add_subcommand("holomorph", "write the holomorph");
  hol->add_option("--bound", holomorph_bound, "largest carrier size");
  hol->add_option("file", table_path)->required();

  CLI::App* auts = table->add_subcommand("automorphisms",
                                         "list the automorphism group");
  auts->add_option("file", table_path)->required();

  CLI::App* nuclei = table->add_subcommand("nuclei", "print the three nuclei");
  nuclei->add_option("file", table_path)->required();

  CLI::App* profile = table->add_subcommand("profile", "identity structure");
  profile->add_option("file", table_path)->required();

  // check ------------------------------------------------------------
  CLI::App* check = app.add_subcommand("check", "decide properties");
  check->require_subcommand(1);
  std::string check_a, check_b, identity_name, identity_expr, witness_path;
  bool evans_do_search = false;
  int workers = qpl::env_worker_count();

  CLI::App* identity = check->add_subcommand("identity", "check an identity");
  identity->add_option("--name", identity_name,
                       "assoc, comm, khalil1..khalil6");
  identity->add_option("--expr", identity_expr, "identity text, e.g. "
                                                "\"x*(y*z) = (x*y)*z\"");
  identity->add_option("--workers", workers);
  identity->add_option("file", check_a)->required();

  CLI::App* isot = check->add_subcommand("isotopic", "search for an isotopism");
  isot->add_option("fileA", check_a)->required();
  isot->add_option("fileB", check_b)->required();

  CLI::App* isom = check->add_subcommand("isomorphic",
                                         "search for an isomorphism");
  isom->add_option("fileA", check_a)->required();
  isom->add_option("fileB", check_b)->required();

  CLI::App* khalil = check->add_subcommand("khalil", "six division identities");
  khalil->add_option("file", check_a)->required();

  CLI::App* evans = check->add_subcommand("evans",
                                          "generalized associative law");
  evans->add_option("--witness", witness_path, "ten permutation lines");
  evans->add_flag("--search", evans_do_search,
                  "search for a witness (order <= 3)");
  evans->add_option("file", check_a)->required();

  // enum ---------------------------------------------------------------
  CLI::App* enumerate = app.add_subcommand("enum", "stream tables");
  std::string enum_kind = "all_latin";
  int enum_order = 3;
  long long enum_limit = -1;
  bool enum_count = false;
  std::optional<std::uint64_t> enum_seed;
  enumerate->add_option("--kind", enum_kind,
                        "all_latin, reduced_latin, loops, groups");
  enumerate->add_option("--order", enum_order)->required();
  enumerate->add_option("--limit", enum_limit, "stop after this many tables");
  enumerate->add_flag("--count", enum_count, "print only the count");
  enumerate->add_option("--seed", enum_seed,
                        "sample seeded random tables instead of enumerating");

  // verify -------------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_name, report_path;
  qpl::SuiteOptions suite_options;
  suite_options.workers = qpl::env_worker_count();
  verify->add_option("suite", suite_name, [] {
            std::string out = "one of:";
            for (const auto name : qpl::suite_names()) {
              out += ' ';
              out += name;
            }
            return out;
          }())
      ->required();
  verify->add_option("--max-order", suite_options.max_order);
  verify->add_option("--seed", suite_options.seed);
  verify->add_option("--sample", suite_options.sample);
  verify->add_option("--workers", suite_options.workers);
  verify->add_option("--holomorph-bound", suite_options.holomorph_bound);
  verify->add_option("--report", report_path, "write records to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_table_validate(table_path);
    if (par->parsed()) return cmd_table_parastrophe(table_path,
                                                    parastrophe_kind);
    if (hol->parsed()) return cmd_table_holomorph(table_path, holomorph_bound);
    if (auts->parsed()) return cmd_table_automorphisms(table_path);
    if (nuclei->parsed()) return cmd_table_nuclei(table_path);
    if (profile->parsed()) return cmd_table_profile(table_path);

    if (identity->parsed()) {
      if (identity_name.empty() == identity_expr.empty()) {
        std::cerr << "error: give exactly one of --name or --expr\n";
        return kExitInputError;
      }
      return cmd_check_identity(check_a, identity_name, identity_expr,
                                workers);
    }
    if (isot->parsed()) return cmd_check_isotopic(check_a, check_b);
    if (isom->parsed()) return cmd_check_isomorphic(check_a, check_b);
    if (khalil->parsed()) return cmd_check_khalil(check_a);
    if (evans->parsed()) {
      if (evans_do_search == !witness_path.empty()) {
        std::cerr << "error: give exactly one of --witness or --search\n";
        return kExitInputError;
      }
      return cmd_check_evans(check_a, witness_path, evans_do_search);
    }

    if (enumerate->parsed()) {
      return cmd_enum(enum_kind, enum_order, enum_limit, enum_count,
                      enum_seed);
    }
    if (verify->parsed()) {
      return cmd_verify(suite_name, suite_options, report_path);
    }
  } catch (const qpl::BoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBound;
  } catch (const qpl::TableParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const qpl::IdentityParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
