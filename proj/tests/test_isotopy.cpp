#include "doctest.h"
#include "qpl/enumerate.hpp"
#include "qpl/errors.hpp"
#include "qpl/isotopy.hpp"
#include "test_util.hpp"

using qpl::IsotopismTriple;
using qpl::ParastropheKind;
using qpl::Perm;
using qpl::Quasigroup;
using qpl::Side;
using qpl_test::klein_four;
using qpl_test::totally_symmetric_3;

namespace {

IsotopismTriple identity_triple(int n) {
  return {Perm::identity(n), Perm::identity(n), Perm::identity(n)};
}

// translation form of the isotopism property: R'_{xB} = A^-1 R_x C for all x
bool isotopism_by_translations(const IsotopismTriple& t, const Quasigroup& q1,
                               const Quasigroup& q2) {
  const Perm ai = t.a.inverse();
  for (int x = 0; x < q1.order(); ++x) {
    const Perm lhs = q2.translation(Side::kRight, t.b[x]);
    const Perm rhs = ai.then(q1.translation(Side::kRight, x)).then(t.c);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("isotopy: identity triple and coinciding tables") {
  const Quasigroup z3 = Quasigroup::cyclic(3);
  CHECK(qpl::is_isotopism(identity_triple(3), z3, z3));

  const Quasigroup z2 = Quasigroup::cyclic(2);
  CHECK(qpl::is_isotopism(identity_triple(2), z2,
                          parastrophe(z2, ParastropheKind::kPi5)));
}

TEST_CASE("isotopy: explicit triple from the first family on Z3") {
  const Quasigroup z3 = Quasigroup::cyclic(3);
  const IsotopismTriple t = qpl::assoc_family_triple(z3, 1, 0);
  CHECK(t.a.images() == std::vector<int>{0, 2, 1});
  CHECK(t.b.is_identity());
  CHECK(t.a == t.c);
  CHECK(qpl::is_isotopism(t, z3, parastrophe(z3, ParastropheKind::kPi5)));
}

TEST_CASE("isotopy: apply_isotopism") {
  const Quasigroup z3 = Quasigroup::cyclic(3);
  CHECK(qpl::apply_isotopism(z3, identity_triple(3)) == z3);

  const Perm cycle({1, 2, 0});
  const IsotopismTriple t{cycle, cycle, cycle};
  const Quasigroup image = qpl::apply_isotopism(z3, t);
  CHECK(qpl::is_isotopism(t, z3, image));
  CHECK(qpl::find_isomorphism(z3, image).has_value());
}

TEST_CASE("isotopy: direct check agrees with the translation form") {
  qpl::SplitMix64 rng(2024);
  for (int n = 2; n <= 4; ++n) {
    qpl::enumerate_tables(qpl::TableKind::kLoops, n, [&](const Quasigroup& q) {
      const IsotopismTriple t{qpl::random_perm(n, rng),
                              qpl::random_perm(n, rng),
                              qpl::random_perm(n, rng)};
      const Quasigroup image = qpl::apply_isotopism(q, t);
      CHECK(qpl::is_isotopism(t, q, image));
      CHECK(isotopism_by_translations(t, q, image));

      // a perturbed triple should fail both routes identically
      std::vector<int> swapped(n);
      for (int i = 0; i < n; ++i) swapped[i] = i;
      std::swap(swapped[0], swapped[1]);
      IsotopismTriple bad = t;
      bad.c = t.c.then(Perm(swapped));
      CHECK(qpl::is_isotopism(bad, q, image) ==
            isotopism_by_translations(bad, q, image));
      return true;
    });
  }
}

TEST_CASE("isotopy: search finds witnesses and respects the bound") {
  const Quasigroup z3 = Quasigroup::cyclic(3);
  const auto self = qpl::find_isotopism(z3, z3);
  REQUIRE(self.has_value());
  CHECK(qpl::is_isotopism(*self, z3, z3));
  // the lexicographically least witness starts from the identity components
  CHECK(self->a.is_identity());
  CHECK(self->b.is_identity());

  const auto cross = qpl::find_isotopism(z3, totally_symmetric_3());
  REQUIRE(cross.has_value());
  CHECK(qpl::is_isotopism(*cross, z3, totally_symmetric_3()));

  CHECK_FALSE(qpl::find_isotopism(Quasigroup::cyclic(4), klein_four()));
  CHECK_THROWS_AS(qpl::find_isotopism(qpl::random_quasigroup(7, 1),
                                      qpl::random_quasigroup(7, 2)),
                  qpl::BoundError);
}

TEST_CASE("isotopy: isotopy is an equivalence relation on instances") {
  const Quasigroup q = totally_symmetric_3();
  const Quasigroup z3 = Quasigroup::cyclic(3);
  const auto forward = qpl::find_isotopism(q, z3);
  REQUIRE(forward.has_value());

  // symmetry: invert the components
  const IsotopismTriple inverse{forward->a.inverse(), forward->b.inverse(),
                                forward->c.inverse()};
  CHECK(qpl::is_isotopism(inverse, z3, q));

  // transitivity: compose componentwise
  const auto onward = qpl::find_isotopism(z3, klein_four());
  CHECK_FALSE(onward.has_value());  // different orders are never isotopic
  const auto z3_to_z3 = qpl::find_isotopism(z3, z3);
  REQUIRE(z3_to_z3.has_value());
  const IsotopismTriple composed{forward->a.then(z3_to_z3->a),
                                 forward->b.then(z3_to_z3->b),
                                 forward->c.then(z3_to_z3->c)};
  CHECK(qpl::is_isotopism(composed, q, z3));
}

TEST_CASE("isotopy: isomorphism search") {
  const Quasigroup z3 = Quasigroup::cyclic(3);
  const auto self = qpl::find_isomorphism(z3, z3);
  REQUIRE(self.has_value());
  CHECK(self->is_identity());

  CHECK_FALSE(qpl::find_isomorphism(Quasigroup::cyclic(4), klein_four()));

  const Perm swap01({1, 0, 2});
  const Quasigroup relabeled =
      qpl::apply_isotopism(z3, {swap01, swap01, swap01});
  const auto phi = qpl::find_isomorphism(z3, relabeled);
  REQUIRE(phi.has_value());
  CHECK(qpl::is_isomorphism(*phi, z3, relabeled));
}

TEST_CASE("isotopy: four families against associativity") {
  const auto z3_report = qpl::theorem_1_1_check(Quasigroup::cyclic(3));
  CHECK(z3_report.associative);
  CHECK(z3_report.all_families_pass());
  CHECK(z3_report.biconditional_ok());

  const auto ts_report = qpl::theorem_1_1_check(totally_symmetric_3());
  CHECK_FALSE(ts_report.associative);
  CHECK_FALSE(ts_report.all_families_pass());
  CHECK(ts_report.biconditional_ok());
  bool some_failure = false;
  for (const auto& family : ts_report.families) {
    if (!family.all_isotopisms) {
      some_failure = true;
      CHECK(family.first_failing_s.has_value());
    }
  }
  CHECK(some_failure);
}

TEST_CASE("isotopy: family biconditional on 1000 seeded order-5 squares") {
  qpl::SplitMix64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Quasigroup q = qpl::random_quasigroup(5, rng.next());
    CHECK(qpl::theorem_1_1_check(q).biconditional_ok());
  }
}

TEST_CASE("isotopy: family triples collapse to the two stated shapes") {
  const Quasigroup q = qpl::random_quasigroup(4, 7);
  for (int family = 1; family <= 4; ++family) {
    for (int s = 0; s < q.order(); ++s) {
      const IsotopismTriple t = qpl::assoc_family_triple(q, family, s);
      const bool a_i_a = t.b.is_identity() && t.a == t.c;
      const bool i_b_b = t.a.is_identity() && t.b == t.c;
      CHECK((a_i_a || i_b_b));
    }
  }
}

TEST_CASE("isotopy: nucleus collapse criterion") {
  const Quasigroup z3 = Quasigroup::cyclic(3);
  const auto trivial = qpl::theorem_0_12_check(z3, z3, identity_triple(3));
  CHECK_FALSE(trivial.precondition_failure.has_value());
  CHECK(trivial.component_is_isomorphism);
  CHECK(trivial.nucleus_contains_image);
  CHECK(trivial.ok());

  // sampled triples with a repeated component, both cases
  qpl::SplitMix64 rng(11);
  for (int n = 2; n <= 5; ++n) {
    qpl::enumerate_tables(qpl::TableKind::kLoops, n, [&](const Quasigroup& g) {
      for (int i = 0; i < 20; ++i) {
        const Perm a = qpl::random_perm(n, rng);
        const Perm b = qpl::random_perm(n, rng);
        for (const bool c_is_b : {true, false}) {
          const IsotopismTriple t{a, b, c_is_b ? b : a};
          const auto r = qpl::theorem_0_12_check(g, qpl::apply_isotopism(g, t),
                                                 t);
          CHECK_FALSE(r.precondition_failure.has_value());
          CHECK(r.ok());
        }
      }
      return true;
    });
  }
}

TEST_CASE("isotopy: nucleus collapse preconditions are reported") {
  const Quasigroup ts = totally_symmetric_3();
  const Quasigroup z3 = Quasigroup::cyclic(3);
  CHECK(qpl::theorem_0_12_check(ts, ts, identity_triple(3))
            .precondition_failure == "first argument is not a loop");

  const IsotopismTriple skew{Perm({1, 2, 0}), Perm({2, 0, 1}),
                             Perm::identity(3)};
  CHECK(qpl::theorem_0_12_check(z3, z3, skew).precondition_failure ==
        "triple has neither C=B nor C=A");

  const IsotopismTriple not_iso{Perm({1, 0, 2}), Perm::identity(3),
                                Perm::identity(3)};
  CHECK(qpl::theorem_0_12_check(z3, z3, not_iso).precondition_failure ==
        "triple is not an isotopism");
}

TEST_CASE("isotopy: parastrophes of group isotopes stay isotopic") {
  const Quasigroup z3 = Quasigroup::cyclic(3);
  CHECK(qpl::falconer_check(z3, z3).all());
  CHECK(qpl::falconer_check(totally_symmetric_3(), z3).all());

  const Quasigroup z4 = Quasigroup::cyclic(4);
  qpl::SplitMix64 rng(3);
  const IsotopismTriple t{qpl::random_perm(4, rng), qpl::random_perm(4, rng),
                          qpl::random_perm(4, rng)};
  CHECK(qpl::falconer_check(qpl::apply_isotopism(z4, t), z4).all());

  CHECK(qpl::falconer_check(z3, totally_symmetric_3()).precondition_failure ==
        "second argument is not associative");
}
