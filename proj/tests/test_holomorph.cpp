#include "doctest.h"
#include "qpl/enumerate.hpp"
#include "qpl/errors.hpp"
#include "qpl/holomorph.hpp"
#include "test_util.hpp"

using qpl::ParastropheKind;
using qpl::Perm;
using qpl::Quasigroup;
using qpl_test::klein_four;
using qpl_test::totally_symmetric_3;

TEST_CASE("holomorph: automorphism groups of small tables") {
  const auto z3 = qpl::automorphism_group(Quasigroup::cyclic(3));
  REQUIRE(z3.size() == 2);
  CHECK(z3[0].is_identity());
  CHECK(z3[1].images() == std::vector<int>{0, 2, 1});  // x -> 2x

  const auto z2 = qpl::automorphism_group(Quasigroup::cyclic(2));
  REQUIRE(z2.size() == 1);
  CHECK(z2[0].is_identity());

  CHECK(qpl::automorphism_group(klein_four()).size() == 6);

  const auto ts = qpl::automorphism_group(totally_symmetric_3());
  REQUIRE(ts.size() == 6);  // every permutation of three points
  CHECK(ts.front().is_identity());
  CHECK(ts.back().images() == std::vector<int>{2, 1, 0});
}

TEST_CASE("holomorph: automorphism groups are parastrophe invariant") {
  for (int n = 2; n <= 4; ++n) {
    qpl::enumerate_tables(qpl::TableKind::kAllLatin, n,
                          [&](const Quasigroup& q) {
                            const auto base = qpl::automorphism_group(q);
                            for (const ParastropheKind kind :
                                 qpl::kAllParastrophes) {
                              CHECK(qpl::automorphism_group(
                                        parastrophe(q, kind)) == base);
                            }
                            return true;
                          });
  }
}

TEST_CASE("holomorph: construction on small tables") {
  CHECK(qpl::holomorph(Quasigroup::cyclic(2)) == Quasigroup::cyclic(2));

  const Quasigroup h3 = qpl::holomorph(Quasigroup::cyclic(3));
  CHECK(h3.order() == 6);
  CHECK(h3.is_associative());
  CHECK_FALSE(h3.loop_profile().commutative);
  CHECK(h3.loop_profile().identity == 0);  // flat code of (id, 0)

  const Quasigroup hts = qpl::holomorph(totally_symmetric_3());
  CHECK(hts.order() == 18);  // six automorphisms on three points

  CHECK_THROWS_AS(qpl::holomorph(totally_symmetric_3(), 10), qpl::BoundError);
}

TEST_CASE("holomorph: a loop is a group exactly when its holomorph is") {
  for (int n = 2; n <= 5; ++n) {
    qpl::enumerate_tables(qpl::TableKind::kLoops, n, [&](const Quasigroup& q) {
      const Quasigroup h = qpl::holomorph(q);
      CHECK(h.loop_profile().is_loop());
      CHECK(h.loop_profile().identity == 0);
      CHECK(q.is_associative() == h.is_associative());
      return true;
    });
  }
}

TEST_CASE("holomorph: interchange with parastrophes on small tables") {
  // commutative base: the transpose case agrees on both levels
  const auto z3 = qpl::theorem_2_5_check(Quasigroup::cyclic(3));
  CHECK(z3[0].kind == ParastropheKind::kPi2);
  CHECK(z3[0].holomorph_sides_equal);
  CHECK(z3[0].base_sides_equal);
  // left division differs from the base operation on Z3, on both levels
  CHECK(z3[1].kind == ParastropheKind::kPi3);
  CHECK_FALSE(z3[1].holomorph_sides_equal);
  CHECK_FALSE(z3[1].base_sides_equal);
  for (const auto& c : z3) CHECK(c.ok());

  // exponent-two base: all parastrophes coincide, so all five cases agree
  for (const auto& c : qpl::theorem_2_5_check(Quasigroup::cyclic(2))) {
    CHECK(c.holomorph_sides_equal);
    CHECK(c.base_sides_equal);
  }

  for (const auto& c : qpl::theorem_2_5_check(totally_symmetric_3())) {
    CHECK(c.ok());
  }
}

TEST_CASE("holomorph: interchange equivalences on every order-4 square") {
  qpl::enumerate_tables(qpl::TableKind::kAllLatin, 4,
                        [](const Quasigroup& q) {
                          for (const auto& c : qpl::theorem_2_5_check(q)) {
                            CHECK(c.ok());
                          }
                          return true;
                        });
}

TEST_CASE("holomorph: starred comparisons over associative bases") {
  const auto z2 = qpl::corollary_2_6_check(Quasigroup::cyclic(2));
  CHECK(z2.all_ok());
  for (const auto& c : z2.cases) {
    CHECK(c.holomorph_sides_equal);
    CHECK(c.parastrophe_associative);
  }

  const auto z3 = qpl::corollary_2_6_check(Quasigroup::cyclic(3));
  CHECK(z3.all_ok());
  for (const auto& c : z3.cases) {
    CHECK_FALSE(c.holomorph_sides_equal);
    CHECK_FALSE(c.parastrophe_associative);
  }

  const auto k4 = qpl::corollary_2_6_check(klein_four());
  CHECK(k4.all_ok());
  for (const auto& c : k4.cases) {
    CHECK(c.holomorph_sides_equal);
    CHECK(c.parastrophe_associative);
  }

  CHECK(qpl::corollary_2_6_check(totally_symmetric_3()).precondition_failure ==
        "argument is not associative");
}
