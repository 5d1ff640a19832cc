#include "qpl/suites.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qpl/enumerate.hpp"
#include "qpl/errors.hpp"
#include "qpl/identity.hpp"
#include "qpl/isotopy.hpp"
#include "qpl/parallel.hpp"
#include "qpl/table_io.hpp"

namespace qpl {

std::uint64_t SuiteReport::failures() const {
  std::uint64_t count = 0;
  for (const SuiteRecord& r : records) {
    if (!r.ok()) ++count;
  }
  return count;
}

void SuiteReport::write(std::ostream& out) const {
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const SuiteRecord& r : records) {
    out << "record claim=" << r.claim << " instance=" << r.instance
        << " lhs=" << flag(r.lhs) << " rhs=" << flag(r.rhs)
        << " ok=" << flag(r.ok()) << '\n';
  }
  for (const SuiteFinding& f : findings) {
    out << "finding suite=" << suite << " instance=" << f.instance
        << " detail=" << f.detail << '\n';
  }
  out << "summary suite=" << suite << " instances=" << instances
      << " records=" << records.size() << " failures=" << failures();
  if (probe) out << " findings=" << findings.size();
  out << '\n';
}

std::string SuiteReport::str() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

namespace {

std::string instance_id(std::string_view prefix, int order, std::size_t index) {
  std::string out(prefix);
  out += "o" + std::to_string(order) + "#" + std::to_string(index);
  return out;
}

int default_or(int value, int fallback) {
  return value < 0 ? fallback : value;
}

std::uint64_t sub_seed(std::uint64_t seed, int order, std::uint64_t index) {
  SplitMix64 rng(seed ^ (static_cast<std::uint64_t>(order) << 40) ^ index);
  return rng.next();
}

// Runs fn over every instance, filling one record vector per instance so
// that reports are identical for every worker count.
template <typename Instance, typename Fn>
void for_instances(const std::vector<Instance>& instances, int workers,
                   SuiteReport& report, Fn&& fn) {
  std::vector<std::vector<SuiteRecord>> slots(instances.size());
  std::vector<std::vector<SuiteFinding>> finding_slots(instances.size());
  run_chunked(instances.size(), workers,
              [&](int, std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i) {
                  fn(instances[i], slots[i], finding_slots[i]);
                }
              });
  report.instances += instances.size();
  for (auto& slot : slots) {
    report.records.insert(report.records.end(), slot.begin(), slot.end());
  }
  for (auto& slot : finding_slots) {
    report.findings.insert(report.findings.end(), slot.begin(), slot.end());
  }
}

struct NamedTable {
  std::string id;
  Quasigroup table;
};

std::vector<NamedTable> squares_up_to(int max_order, std::string_view prefix) {
  std::vector<NamedTable> out;
  for (int n = 2; n <= max_order; ++n) {
    std::size_t index = 0;
    enumerate_tables(TableKind::kAllLatin, n, [&](const Quasigroup& q) {
      out.push_back({instance_id(prefix, n, index++), q});
      return true;
    });
  }
  return out;
}

std::vector<NamedTable> kind_up_to(TableKind kind, int max_order,
                                   std::string_view prefix) {
  std::vector<NamedTable> out;
  for (int n = 2; n <= max_order; ++n) {
    std::size_t index = 0;
    enumerate_tables(kind, n, [&](const Quasigroup& q) {
      out.push_back({instance_id(prefix, n, index++), q});
      return true;
    });
  }
  return out;
}

// ---------------------------------------------------------------------
// lemma0.1: the ten translation identities on every square of orders
// 2..max, plus seeded random squares of order max+1.

SuiteReport run_lemma_0_1(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "lemma0.1";
  const int max_order = default_or(options.max_order, 4);
  const int samples = default_or(options.sample, 1000);

  std::vector<NamedTable> instances = squares_up_to(max_order, "");
  SplitMix64 rng(options.seed);
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t s = rng.next();
    instances.push_back({"rand-o" + std::to_string(max_order + 1) + "#" +
                             std::to_string(i),
                         random_quasigroup(max_order + 1, s)});
  }

  for_instances(instances, options.workers, report,
                [&](const NamedTable& inst, std::vector<SuiteRecord>& records,
                    std::vector<SuiteFinding>&) {
                  for (const LemmaIdentityCheck& check :
                       check_translation_lemma(inst.table)) {
                    records.push_back({"lemma0.1/" + std::string(check.name),
                                       inst.id, check.pass, true});
                  }
                });
  return report;
}

// ---------------------------------------------------------------------
// thm1.1: each of the four triple families, and their conjunction, is
// all-isotopisms exactly when the square is associative.

SuiteReport run_thm_1_1(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "thm1.1";
  const int max_order = default_or(options.max_order, 4);
  const std::vector<NamedTable> instances = squares_up_to(max_order, "");

  for_instances(instances, options.workers, report,
                [&](const NamedTable& inst, std::vector<SuiteRecord>& records,
                    std::vector<SuiteFinding>&) {
                  const AssocFamiliesReport r = theorem_1_1_check(inst.table);
                  for (const FamilyCheck& f : r.families) {
                    records.push_back({"thm1.1/" + std::string(f.name),
                                       inst.id, f.all_isotopisms,
                                       r.associative});
                  }
                  records.push_back({"thm1.1/all", inst.id,
                                     r.all_families_pass(), r.associative});
                });
  return report;
}

// ---------------------------------------------------------------------
// thm0.1.2: at a single order, a square satisfies all six division
// identities exactly when it is isotopic to some group of that order.

SuiteReport run_thm_0_1_2(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "thm0.1.2";
  const int order = default_or(options.max_order, 4);

  const std::vector<Quasigroup> groups = collect_tables(TableKind::kGroups,
                                                        order);
  std::vector<NamedTable> instances;
  std::size_t index = 0;
  enumerate_tables(TableKind::kAllLatin, order, [&](const Quasigroup& q) {
    instances.push_back({instance_id("", order, index++), q});
    return true;
  });

  for_instances(
      instances, options.workers, report,
      [&](const NamedTable& inst, std::vector<SuiteRecord>& records,
          std::vector<SuiteFinding>&) {
        const std::array<bool, 6> suite = khalil_suite(inst.table);
        const bool all_six =
            std::all_of(suite.begin(), suite.end(), [](bool b) { return b; });
        const bool isotopic =
            std::any_of(groups.begin(), groups.end(), [&](const Quasigroup& g) {
              return find_isotopism(inst.table, g).has_value();
            });
        records.push_back({"thm0.1.2/bicond", inst.id, all_six, isotopic});
      });
  return report;
}

// ---------------------------------------------------------------------
// thm0.1.3: when a square is isotopic to a group, all six parastrophes are
// isotopic to that same group. Squares isotopic to no group are skipped.

SuiteReport run_thm_0_1_3(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "thm0.1.3";
  const int max_order = default_or(options.max_order, 4);

  std::vector<std::pair<NamedTable, Quasigroup>> instances;
  for (int n = 2; n <= max_order; ++n) {
    const std::vector<Quasigroup> groups =
        collect_tables(TableKind::kGroups, n);
    std::size_t index = 0;
    enumerate_tables(TableKind::kAllLatin, n, [&](const Quasigroup& q) {
      const std::size_t id = index++;
      for (const Quasigroup& g : groups) {
        if (find_isotopism(q, g)) {
          instances.push_back({{instance_id("", n, id), q}, g});
          break;
        }
      }
      return true;
    });
  }

  for_instances(instances, options.workers, report,
                [&](const std::pair<NamedTable, Quasigroup>& inst,
                    std::vector<SuiteRecord>& records,
                    std::vector<SuiteFinding>&) {
                  const ParastropheIsotopyReport r =
                      falconer_check(inst.first.table, inst.second);
                  for (std::size_t i = 0; i < kAllParastrophes.size(); ++i) {
                    records.push_back(
                        {"thm0.1.3/" +
                             std::string(to_string(kAllParastrophes[i])),
                         inst.first.id,
                         !r.precondition_failure && r.parastrophe_isotopic[i],
                         true});
                  }
                });
  return report;
}

// ---------------------------------------------------------------------
// thm0.12: sampled isotopisms with a repeated component from each loop;
// the collapsed component is an isomorphism exactly when the identity's
// image lands in the appropriate nucleus.

SuiteReport run_thm_0_12(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "thm0.12";
  const int max_order = default_or(options.max_order, 5);
  const int samples = default_or(options.sample, 100);

  const std::vector<NamedTable> instances =
      kind_up_to(TableKind::kLoops, max_order, "loop-");

  for_instances(
      instances, options.workers, report,
      [&](const NamedTable& inst, std::vector<SuiteRecord>& records,
          std::vector<SuiteFinding>&) {
        const int n = inst.table.order();
        std::uint64_t salt = 0;
        for (char c : inst.id) salt = salt * 131 + static_cast<unsigned char>(c);
        SplitMix64 rng(sub_seed(options.seed, n, salt));
        for (int t = 0; t < samples; ++t) {
          for (const bool c_equals_b : {true, false}) {
            const Perm a = random_perm(n, rng);
            const Perm b = random_perm(n, rng);
            const IsotopismTriple triple{a, b, c_equals_b ? b : a};
            const Quasigroup h = apply_isotopism(inst.table, triple);
            const NucleusCollapseReport r =
                theorem_0_12_check(inst.table, h, triple);
            records.push_back(
                {std::string("thm0.12/") + (c_equals_b ? "C=B" : "C=A"),
                 inst.id + "/t" + std::to_string(t),
                 !r.precondition_failure && r.component_is_isomorphism,
                 !r.precondition_failure && r.nucleus_contains_image});
          }
        }
      });
  return report;
}

// ---------------------------------------------------------------------
// probe-1.1-converse: search for non-associative squares isotopic to their
// own pi5 parastrophe. Such squares show that bare isotopy between pi1 and
// pi5 does not imply associativity; they are reported, not asserted.

SuiteReport run_probe_1_1_converse(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "probe-1.1-converse";
  report.probe = true;
  const int max_order = default_or(options.max_order, 4);
  const std::vector<NamedTable> instances = squares_up_to(max_order, "");

  for_instances(instances, options.workers, report,
                [&](const NamedTable& inst, std::vector<SuiteRecord>&,
                    std::vector<SuiteFinding>& findings) {
                  if (inst.table.is_associative()) return;
                  if (find_isotopism(
                          inst.table,
                          parastrophe(inst.table, ParastropheKind::kPi5))) {
                    findings.push_back(
                        {inst.id,
                         "non-associative square isotopic to its pi5 "
                         "parastrophe"});
                  }
                });
  return report;
}

// ---------------------------------------------------------------------
// cor1.2: on every group, each division parastrophe satisfies all six
// division identities.

SuiteReport run_cor_1_2(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "cor1.2";
  const int max_order = default_or(options.max_order, 6);
  const std::vector<NamedTable> instances =
      kind_up_to(TableKind::kGroups, max_order, "grp-");

  static const std::array<std::string_view, 4> kind_names = {"pi3", "pi4",
                                                             "pi5", "pi6"};
  for_instances(instances, options.workers, report,
                [&](const NamedTable& inst, std::vector<SuiteRecord>& records,
                    std::vector<SuiteFinding>&) {
                  const KhalilParastropheReport r =
                      corollary_1_2_check(inst.table);
                  for (std::size_t k = 0; k < 4; ++k) {
                    for (int i = 0; i < 6; ++i) {
                      records.push_back(
                          {"cor1.2/" + std::string(kind_names[k]) + "-khalil" +
                               std::to_string(i + 1),
                           inst.id,
                           !r.precondition_failure && r.holds[k][i], true});
                    }
                  }
                });
  return report;
}

// ---------------------------------------------------------------------
// cor1.21: on every group, equality with each division parastrophe holds
// exactly when that parastrophe is associative.

SuiteReport run_cor_1_21(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "cor1.21";
  const int max_order = default_or(options.max_order, 6);
  const std::vector<NamedTable> instances =
      kind_up_to(TableKind::kGroups, max_order, "grp-");

  for_instances(instances, options.workers, report,
                [&](const NamedTable& inst, std::vector<SuiteRecord>& records,
                    std::vector<SuiteFinding>&) {
                  const ParastropheEquivReport r =
                      corollary_1_21_check(inst.table);
                  for (std::size_t i = 0; i < r.parts.size(); ++i) {
                    records.push_back(
                        {"cor1.21/part" + std::to_string(i + 1), inst.id,
                         !r.precondition_failure && r.parts[i].tables_equal,
                         !r.precondition_failure &&
                             r.parts[i].target_associative});
                  }
                });
  return report;
}

// ---------------------------------------------------------------------
// cor1.14: isotopy-isomorphy, mechanized through the nucleus criterion.
// For each part (source, target, family):
//   partK-isotopy    every family triple is an isotopism (true on groups)
//   partK-collapse   identity-map isomorphy <=> the relevant nucleus of the
//                    target is the full carrier
//   partK-dichotomy  that nucleus is empty or full
//   partK-assoc      identity-map isomorphy <=> target associative

SuiteReport run_cor_1_14(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "cor1.14";
  const int max_order = default_or(options.max_order, 6);
  const std::vector<NamedTable> instances =
      kind_up_to(TableKind::kGroups, max_order, "grp-");

  for_instances(
      instances, options.workers, report,
      [&](const NamedTable& inst, std::vector<SuiteRecord>& records,
          std::vector<SuiteFinding>&) {
        const Quasigroup& g = inst.table;
        const int n = g.order();
        for (int family = 1; family <= 4; ++family) {
          const FamilyDescriptor& desc = kAssocIsotopyFamilies[family - 1];
          const Quasigroup source = parastrophe(g, desc.source);
          const Quasigroup target = parastrophe(g, desc.target);
          const std::string part = "cor1.14/part" + std::to_string(family);

          bool family_isotopisms = true;
          for (int s = 0; s < n && family_isotopisms; ++s) {
            family_isotopisms =
                is_isotopism(assoc_family_triple(g, family, s), source,
                             target);
          }
          records.push_back({part + "-isotopy", inst.id, family_isotopisms,
                             true});

          // families eq1/eq4 are (A, I, A), so the left nucleus decides;
          // eq2/eq3 are (I, B, B) and use the right nucleus
          const bool left_side = family == 1 || family == 4;
          const std::vector<int> nuc = target.nucleus(
              left_side ? NucleusKind::kLeft : NucleusKind::kRight);
          const bool equal = source == target;
          records.push_back({part + "-collapse", inst.id, equal,
                             static_cast<int>(nuc.size()) == n});
          records.push_back({part + "-dichotomy", inst.id,
                             nuc.empty() ||
                                 static_cast<int>(nuc.size()) == n,
                             true});
          records.push_back(
              {part + "-assoc", inst.id, equal, target.is_associative()});
        }
      });
  return report;
}

// ---------------------------------------------------------------------
// thm2.5: the five holomorph/parastrophe interchange equivalences, over all
// squares of orders 2..3 and all loops of orders 4..max.

SuiteReport run_thm_2_5(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "thm2.5";
  const int max_order = default_or(options.max_order, 4);

  std::vector<NamedTable> instances = squares_up_to(std::min(max_order, 3), "");
  for (int n = 4; n <= max_order; ++n) {
    std::size_t index = 0;
    enumerate_tables(TableKind::kLoops, n, [&](const Quasigroup& q) {
      instances.push_back({instance_id("loop-", n, index++), q});
      return true;
    });
  }

  // drop instances whose holomorph would exceed the bound
  std::vector<NamedTable> kept;
  for (NamedTable& inst : instances) {
    const std::size_t aut_count = automorphism_group(inst.table).size();
    if (static_cast<int>(aut_count) * inst.table.order() <=
        options.holomorph_bound) {
      kept.push_back(std::move(inst));
    }
  }

  for_instances(kept, options.workers, report,
                [&](const NamedTable& inst, std::vector<SuiteRecord>& records,
                    std::vector<SuiteFinding>&) {
                  for (const HolomorphCase& c : theorem_2_5_check(
                           inst.table, options.holomorph_bound)) {
                    records.push_back(
                        {"thm2.5/" + std::string(to_string(c.kind)), inst.id,
                         c.holomorph_sides_equal, c.base_sides_equal});
                  }
                });
  return report;
}

// ---------------------------------------------------------------------
// cor2.6: the four starred holomorph comparisons on every group.

SuiteReport run_cor_2_6(const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "cor2.6";
  const int max_order = default_or(options.max_order, 6);

  std::vector<NamedTable> instances =
      kind_up_to(TableKind::kGroups, max_order, "grp-");
  std::vector<NamedTable> kept;
  for (NamedTable& inst : instances) {
    const std::size_t aut_count = automorphism_group(inst.table).size();
    if (static_cast<int>(aut_count) * inst.table.order() <=
        options.holomorph_bound) {
      kept.push_back(std::move(inst));
    }
  }

  for_instances(kept, options.workers, report,
                [&](const NamedTable& inst, std::vector<SuiteRecord>& records,
                    std::vector<SuiteFinding>&) {
                  const HolomorphAssocReport r = corollary_2_6_check(
                      inst.table, options.holomorph_bound);
                  for (std::size_t i = 0; i < r.cases.size(); ++i) {
                    records.push_back(
                        {"cor2.6/part" + std::to_string(i + 1), inst.id,
                         !r.precondition_failure &&
                             r.cases[i].holomorph_sides_equal,
                         !r.precondition_failure &&
                             r.cases[i].parastrophe_associative});
                  }
                });
  return report;
}

}  // namespace

std::vector<std::string_view> suite_names() {
  return {"lemma0.1", "thm0.1.2", "thm0.1.3",          "thm0.12",
          "thm1.1",   "cor1.2",   "cor1.14",           "cor1.21",
          "thm2.5",   "cor2.6",   "probe-1.1-converse"};
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "lemma0.1") return run_lemma_0_1(options);
  if (name == "thm0.1.2") return run_thm_0_1_2(options);
  if (name == "thm0.1.3") return run_thm_0_1_3(options);
  if (name == "thm0.12") return run_thm_0_12(options);
  if (name == "thm1.1") return run_thm_1_1(options);
  if (name == "cor1.2") return run_cor_1_2(options);
  if (name == "cor1.14") return run_cor_1_14(options);
  if (name == "cor1.21") return run_cor_1_21(options);
  if (name == "thm2.5") return run_thm_2_5(options);
  if (name == "cor2.6") return run_cor_2_6(options);
  if (name == "probe-1.1-converse") return run_probe_1_1_converse(options);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace qpl
