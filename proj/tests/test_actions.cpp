#include <doctest.h>

#include "gpd/action.hpp"
#include "support.hpp"

using namespace gpd;
using testsupport::P2Swap;

TEST_CASE("Z/2 swap action on P2 is an action by isomorphisms") {
  P2Swap s;  // construction validates; throwing would fail the test
  CHECK(s.action.target_size == 4);
  SUBCASE("composition property holds exhaustively") {
    for (Arrow x = 0; x < s.g.size(); ++x)
      for (Arrow y = 0; y < s.g.size(); ++y) {
        if (s.g.mul(x, y) == kUndefined) continue;
        for (Arrow a = 0; a < s.h.size(); ++a) {
          if (!s.action.defined(s.g, y, a)) continue;
          CHECK(s.action.apply(x, s.action.apply(y, a)) ==
                s.action.apply(s.g.mul(x, y), a));
        }
      }
  }
}

TEST_CASE("trivial action of G on its unit space is valid") {
  FiniteGroupoid g = cyclic_group(3);
  FiniteGroupoid pt = space_as_groupoid(1);
  auto v = validate_action_by_isomorphisms(g, pt, testsupport::trivial_action_on_units(g, pt));
  CHECK(v.ok());
}

TEST_CASE("mis-set swap entry is reported as not multiplicative") {
  P2Swap s;
  GroupoidAction broken = s.action;
  // act(g,(0,1)) := (0,1) instead of (1,0); arrow (0,1) has index 1.
  broken.table[s.h.size() + 1] = 1;
  auto v = validate_action_by_isomorphisms(s.g, s.h, broken);
  REQUIRE_FALSE(v.ok());
  bool multiplicative_failure = false;
  for (const auto& viol : v.violations)
    if (viol.axiom.find("not multiplicative") != std::string::npos ||
        viol.axiom.find("not injective") != std::string::npos)
      multiplicative_failure = true;
  CHECK(multiplicative_failure);
}

TEST_CASE("counting haar is invariant under any action") {
  P2Swap s;
  CHECK(check_invariant_haar(s.g, s.h, s.action, counting_haar(s.h)).invariant);
}

TEST_CASE("invariance fails iff the unit weight is not orbit-constant") {
  P2Swap s;
  SUBCASE("w = (1,3) is moved by the swap") {
    auto haar = canonical_haar(s.h, {Rational(1), Rational(3), Rational(1), Rational(3)});
    REQUIRE(haar.ok());
    InvarianceCheck c = check_invariant_haar(s.g, s.h, s.action, *haar.value);
    CHECK_FALSE(c.invariant);
    CHECK(c.x == 1);     // the swap g
    CHECK(c.unit == 0);  // unit (0,0)
  }
  SUBCASE("w = (2,2) is orbit-constant") {
    auto haar = canonical_haar(s.h, {Rational(2), Rational(2), Rational(2), Rational(2)});
    REQUIRE(haar.ok());
    CHECK(check_invariant_haar(s.g, s.h, s.action, *haar.value).invariant);
  }
}

TEST_CASE("translation action validates and has invariant counting haar") {
  for (int n : {2, 3}) {
    FiniteGroupoid g = cyclic_group(n);
    TranslationAction ta = translation_action(g);
    CHECK(ta.h.size() == n * n);
    CHECK(check_invariant_haar(g, ta.h, ta.action, counting_haar(ta.h)).invariant);
  }
}

TEST_CASE("fiber subgroupoids of the translation action") {
  FiniteGroupoid g = cyclic_group(3);
  TranslationAction ta = translation_action(g);
  // Single G-unit: the fibre is everything.
  SubGroupoid fib = fiber_subgroupoid(ta.h, ta.action, 0);
  CHECK(fib.groupoid.size() == ta.h.size());
}
