#include "qpl/holomorph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qpl/isotopy.hpp"

#include "qpl/errors.hpp"

namespace qpl {

std::vector<Perm> automorphism_group(const Quasigroup& q, int order_bound) {
  const int n = q.order();
  if (n > order_bound) {
    throw BoundError("automorphism_group: order " + std::to_string(n) +
                     " exceeds search bound " + std::to_string(order_bound));
  }
  std::vector<Perm> out;
  for (const Perm& p : all_perms(n)) {
    if (is_isomorphism(p, q, q)) out.push_back(p);
  }
  return out;  // all_perms is lexicographic, so the identity leads
}

Quasigroup holomorph(const Quasigroup& q, int max_elements) {
  const std::vector<Perm> auts = automorphism_group(q);
  const int n = q.order();
  const int m = static_cast<int>(auts.size());
  if (m * n > max_elements) {
    throw BoundError("holomorph: carrier size " + std::to_string(m * n) +
                     " exceeds bound " + std::to_string(max_elements));
  }

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[auts[i].images()] = i;
  std::vector<int> compose(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      compose[i * m + j] = index.at(auts[i].then(auts[j]).images());
    }
  }

  const int order = m * n;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < m; ++i) {
    for (int x = 0; x < n; ++x) {
      const int row = i * n + x;
      for (int j = 0; j < m; ++j) {
        const int k = compose[i * m + j];
        const int xb = auts[j][x];
        for (int y = 0; y < n; ++y) {
          table[row * order + (j * n + y)] = k * n + q.mul(xb, y);
        }
      }
    }
  }
  return Quasigroup(order, std::move(table));
}

namespace {

// pi3-then-pi2 for the left-division kinds, pi4-then-pi2 for the
// right-division kinds.
Quasigroup starred_route(const Quasigroup& h, ParastropheKind kind) {
  const bool left_division =
      kind == ParastropheKind::kPi3 || kind == ParastropheKind::kPi5;
  const Quasigroup inner = parastrophe(
      h, left_division ? ParastropheKind::kPi3 : ParastropheKind::kPi4);
  return parastrophe(inner, ParastropheKind::kPi2);
}

}  // namespace

std::array<HolomorphCase, 5> theorem_2_5_check(const Quasigroup& q,
                                               int max_elements) {
  const Quasigroup h = holomorph(q, max_elements);
  std::array<HolomorphCase, 5> cases;
  for (int i = 0; i < 5; ++i) {
    const ParastropheKind kind = kAllParastrophes[i + 1];  // pi2..pi6
    const Quasigroup pq = parastrophe(q, kind);
    const Quasigroup hk = holomorph(pq, max_elements);
    Quasigroup lhs = parastrophe(h, kind);
    Quasigroup rhs = [&] {
      switch (kind) {
        case ParastropheKind::kPi2:
        case ParastropheKind::kPi3:
        case ParastropheKind::kPi4:
          return parastrophe(hk, kind);
        default:
          return starred_route(hk, kind);
      }
    }();
    cases[i] = HolomorphCase{kind, lhs == rhs, q == pq};
  }
  return cases;
}

HolomorphAssocReport corollary_2_6_check(const Quasigroup& g,
                                         int max_elements) {
  HolomorphAssocReport report;
  if (!g.is_associative()) {
    report.precondition_failure = "argument is not associative";
    return report;
  }
  const Quasigroup h = holomorph(g, max_elements);
  const std::array<ParastropheKind, 4> kinds = {
      ParastropheKind::kPi3, ParastropheKind::kPi4, ParastropheKind::kPi5,
      ParastropheKind::kPi6};
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const Quasigroup pg = parastrophe(g, kinds[i]);
    const Quasigroup hk = holomorph(pg, max_elements);
    const Quasigroup lhs = starred_route(h, kinds[i]);
    const Quasigroup rhs = starred_route(hk, kinds[i]);
    report.cases[i] =
        HolomorphAssocCase{kinds[i], lhs == rhs, pg.is_associative()};
  }
  return report;
}

bool HolomorphAssocReport::all_ok() const {
  return !precondition_failure &&
         std::all_of(cases.begin(), cases.end(),
                     [](const HolomorphAssocCase& c) { return c.ok(); });
}

}  // namespace qpl
