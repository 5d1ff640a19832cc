#include "qpl/isotopy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qpl/errors.hpp"

namespace qpl {

bool is_isotopism(const IsotopismTriple& t, const Quasigroup& q1,
                  const Quasigroup& q2) {
  const int n = q1.order();
  if (q2.order() != n || t.a.degree() != n || t.b.degree() != n ||
      t.c.degree() != n) {
    throw std::invalid_argument("is_isotopism: degree mismatch");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (q2.mul(t.a[x], t.b[y]) != t.c[q1.mul(x, y)]) return false;
    }
  }
  return true;
}

Quasigroup apply_isotopism(const Quasigroup& q, const IsotopismTriple& t) {
  const int n = q.order();
  if (t.a.degree() != n || t.b.degree() != n || t.c.degree() != n) {
    throw std::invalid_argument("apply_isotopism: degree mismatch");
  }
  const Perm ai = t.a.inverse();
  const Perm bi = t.b.inverse();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      out[u * n + v] = t.c[q.mul(ai[u], bi[v])];
    }
  }
  return Quasigroup(n, std::move(out));
}

std::optional<IsotopismTriple> find_isotopism(const Quasigroup& q1,
                                              const Quasigroup& q2,
                                              int order_bound) {
  const int n = q1.order();
  if (q2.order() != n) return std::nullopt;
  if (n > order_bound) {
    throw BoundError("find_isotopism: order " + std::to_string(n) +
                     " exceeds search bound " + std::to_string(order_bound));
  }
  std::vector<int> a(n), b(n), c(n);
  std::iota(a.begin(), a.end(), 0);
  do {
    std::iota(b.begin(), b.end(), 0);
    do {
      std::fill(c.begin(), c.end(), -1);
      std::vector<bool> used(n, false);
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          const int z = q1.mul(x, y);
          const int w = q2.mul(a[x], b[y]);
          if (c[z] == -1) {
            if (used[w]) {
              ok = false;
            } else {
              c[z] = w;
              used[w] = true;
            }
          } else if (c[z] != w) {
            ok = false;
          }
        }
      }
      if (ok) {
        return IsotopismTriple{Perm(a), Perm(b), Perm(c)};
      }
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  return std::nullopt;
}

bool is_isomorphism(const Perm& phi, const Quasigroup& q1,
                    const Quasigroup& q2) {
  const int n = q1.order();
  if (q2.order() != n || phi.degree() != n) return false;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (q2.mul(phi[x], phi[y]) != phi[q1.mul(x, y)]) return false;
    }
  }
  return true;
}

namespace {

// DFS state for the isomorphism search. Images are assigned to the lowest
// unassigned element in ascending order, so the first full assignment found
// is the lexicographically least one; propagation only prunes.
struct IsoSearch {
  const Quasigroup& q1;
  const Quasigroup& q2;
  int n;
  std::vector<int> image;       // -1 = unassigned
  std::vector<bool> used;
  std::vector<int> trail;       // elements assigned, in assignment order

  bool assign(int x, int v) {
    if (image[x] != -1) return image[x] == v;
    if (used[v]) return false;
    image[x] = v;
    used[v] = true;
    trail.push_back(x);
    return propagate_from(x);
  }

  // Close the assigned set under products involving x in either slot.
  bool propagate_from(int x) {
    for (int y = 0; y < n; ++y) {
      if (image[y] == -1) continue;
      if (!require(q1.mul(x, y), q2.mul(image[x], image[y]))) return false;
      if (y != x &&
          !require(q1.mul(y, x), q2.mul(image[y], image[x]))) return false;
    }
    return true;
  }

  bool require(int x, int v) { return assign(x, v); }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      const int x = trail.back();
      trail.pop_back();
      used[image[x]] = false;
      image[x] = -1;
    }
  }

  bool solve() {
    int x = 0;
    while (x < n && image[x] != -1) ++x;
    if (x == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      const std::size_t mark = trail.size();
      if (assign(x, v) && solve()) return true;
      undo_to(mark);
    }
    return false;
  }
};

}  // namespace

std::optional<Perm> find_isomorphism(const Quasigroup& q1,
                                     const Quasigroup& q2) {
  const int n = q1.order();
  if (q2.order() != n) return std::nullopt;
  IsoSearch search{q1, q2, n, std::vector<int>(n, -1),
                   std::vector<bool>(n, false), {}};
  if (!search.solve()) return std::nullopt;
  return Perm(search.image);
}

const std::array<FamilyDescriptor, 4> kAssocIsotopyFamilies = {{
    {"eq1", ParastropheKind::kPi1, ParastropheKind::kPi5},
    {"eq2", ParastropheKind::kPi2, ParastropheKind::kPi3},
    {"eq3", ParastropheKind::kPi1, ParastropheKind::kPi6},
    {"eq4", ParastropheKind::kPi2, ParastropheKind::kPi4},
}};

IsotopismTriple assoc_family_triple(const Quasigroup& q, int family, int s) {
  // R3_s is the right translation of pi3 at s, L4_s the left translation of
  // pi4 at s.
  const Perm r3 =
      parastrophe_translation(q, {ParastropheKind::kPi3, Side::kRight}, s);
  const Perm l4 =
      parastrophe_translation(q, {ParastropheKind::kPi4, Side::kLeft}, s);
  const Perm id = Perm::identity(q.order());
  switch (family) {
    case 1: return {r3, id, r3};
    case 2: return {id, r3, r3};
    case 3: return {id, l4, l4};
    case 4: return {l4, id, l4};
    default: throw std::invalid_argument("assoc_family_triple: family 1..4");
  }
}

AssocFamiliesReport theorem_1_1_check(const Quasigroup& q) {
  const int n = q.order();
  AssocFamiliesReport report;
  report.associative = q.is_associative();
  for (int family = 1; family <= 4; ++family) {
    const FamilyDescriptor& desc = kAssocIsotopyFamilies[family - 1];
    FamilyCheck check{desc.name, true, std::nullopt};
    const Quasigroup source = parastrophe(q, desc.source);
    const Quasigroup target = parastrophe(q, desc.target);
    for (int s = 0; s < n; ++s) {
      if (!is_isotopism(assoc_family_triple(q, family, s), source, target)) {
        check.all_isotopisms = false;
        check.first_failing_s = s;
        break;
      }
    }
    report.families[family - 1] = check;
  }
  return report;
}

bool AssocFamiliesReport::all_families_pass() const {
  return std::all_of(families.begin(), families.end(),
                     [](const FamilyCheck& f) { return f.all_isotopisms; });
}

NucleusCollapseReport theorem_0_12_check(const Quasigroup& g,
                                         const Quasigroup& h,
                                         const IsotopismTriple& t) {
  NucleusCollapseReport report;
  if (g.order() != h.order() || t.degree() != g.order()) {
    report.precondition_failure = "degree mismatch";
    return report;
  }
  const LoopProfile profile = g.loop_profile();
  if (!profile.is_loop()) {
    report.precondition_failure = "first argument is not a loop";
    return report;
  }
  if (t.c != t.b && t.c != t.a) {
    report.precondition_failure = "triple has neither C=B nor C=A";
    return report;
  }
  if (!is_isotopism(t, g, h)) {
    report.precondition_failure = "triple is not an isotopism";
    return report;
  }
  const int e = *profile.identity;
  report.case_c_equals_b = (t.c == t.b);
  if (report.case_c_equals_b) {
    report.component_is_isomorphism = is_isomorphism(t.a, g, h);
    const std::vector<int> nuc = h.nucleus(NucleusKind::kRight);
    report.nucleus_contains_image =
        std::find(nuc.begin(), nuc.end(), t.b[e]) != nuc.end();
  } else {
    report.component_is_isomorphism = is_isomorphism(t.b, g, h);
    const std::vector<int> nuc = h.nucleus(NucleusKind::kLeft);
    report.nucleus_contains_image =
        std::find(nuc.begin(), nuc.end(), t.a[e]) != nuc.end();
  }
  return report;
}

ParastropheIsotopyReport falconer_check(const Quasigroup& q,
                                        const Quasigroup& g) {
  ParastropheIsotopyReport report;
  if (!g.is_associative()) {
    report.precondition_failure = "second argument is not associative";
    return report;
  }
  if (!find_isotopism(q, g)) {
    report.precondition_failure = "arguments are not isotopic";
    return report;
  }
  for (std::size_t i = 0; i < kAllParastrophes.size(); ++i) {
    report.parastrophe_isotopic[i] =
        find_isotopism(parastrophe(q, kAllParastrophes[i]), g).has_value();
  }
  return report;
}

bool ParastropheIsotopyReport::all() const {
  return !precondition_failure &&
         std::all_of(parastrophe_isotopic.begin(), parastrophe_isotopic.end(),
                     [](bool b) { return b; });
}

}  // namespace qpl
