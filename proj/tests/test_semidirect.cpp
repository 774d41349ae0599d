#include <doctest.h>

#include "gpd/semidirect.hpp"
#include "support.hpp"

using namespace gpd;
using testsupport::P2Swap;

TEST_CASE("P2 swap semidirect product has 8 arrows and 2 units") {
  P2Swap s;
  SemidirectGroupoid sd = semidirect_groupoid(s.g, s.h, s.action);
  CHECK(sd.groupoid.size() == 8);
  CHECK(sd.groupoid.unit_count() == 2);
}

TEST_CASE("semidirect range and source follow the displayed formulas") {
  P2Swap s;
  SemidirectGroupoid sd = semidirect_groupoid(s.g, s.h, s.action);
  for (Arrow a = 0; a < sd.groupoid.size(); ++a) {
    auto [h, x] = sd.pairs[a];
    CHECK(sd.groupoid.range(a) == sd.arrow_of(s.h.range(h), s.g.range(x)));
    CHECK(sd.groupoid.source(a) ==
          sd.arrow_of(s.action.apply(s.g.inverse(x), s.h.source(h)), s.g.source(x)));
  }
}

TEST_CASE("trivial acting group gives back H under the first projection") {
  FiniteGroupoid triv = trivial_group();
  for (const FiniteGroupoid& h : {pair_groupoid(3), klein_four_group()}) {
    GroupoidAction a = testsupport::trivial_group_action(triv, h);
    auto v = validate_action_by_isomorphisms(triv, h, a);
    REQUIRE(v.ok());
    SemidirectGroupoid sd = semidirect_groupoid(triv, h, *v.value);
    std::vector<Arrow> pi1(sd.groupoid.size());
    for (Arrow i = 0; i < sd.groupoid.size(); ++i) pi1[i] = sd.pairs[i].first;
    CHECK(testsupport::is_groupoid_isomorphism(sd.groupoid, h, pi1));
  }
}

TEST_CASE("semidirect haar multiplies the weights and stays invariant") {
  P2Swap s;
  SemidirectGroupoid sd = semidirect_groupoid(s.g, s.h, s.action);
  SUBCASE("counting times counting is counting") {
    auto v = semidirect_haar(s.g, s.h, s.action, counting_haar(s.h), counting_haar(s.g), sd);
    REQUIRE(v.ok());
    for (const Rational& w : v->weight) CHECK(w == 1);
  }
  SUBCASE("w_H = 2, w_G = 1") {
    auto wh = canonical_haar(s.h, std::vector<Rational>(4, Rational(2)));
    REQUIRE(wh.ok());
    auto v = semidirect_haar(s.g, s.h, s.action, *wh.value, counting_haar(s.g), sd);
    REQUIRE(v.ok());
    for (const Rational& w : v->weight) CHECK(w == 2);
  }
  SUBCASE("non-invariant w_H = (1,3) is rejected with the invariance witness") {
    auto wh = canonical_haar(s.h, {Rational(1), Rational(3), Rational(1), Rational(3)});
    REQUIRE(wh.ok());
    auto v = semidirect_haar(s.g, s.h, s.action, *wh.value, counting_haar(s.g), sd);
    REQUIRE_FALSE(v.ok());
    CHECK(v.violations[0].axiom.find("invariant") != std::string::npos);
  }
}

namespace {

SpaceAction left_translation_space(const FiniteGroupoid& g) {
  SpaceAction sp;
  sp.points = g.size();
  sp.moment.resize(g.size());
  for (Arrow t = 0; t < g.size(); ++t) {
    sp.moment[t] = g.range(t);
    sp.point_labels.push_back(g.label(t));
  }
  sp.table.assign(static_cast<size_t>(g.size()) * g.size(), kUndefined);
  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow t = 0; t < g.size(); ++t)
      if (g.source(x) == g.range(t))
        sp.table[static_cast<size_t>(x) * g.size() + t] = g.mul(x, t);
  return sp;
}

GroupoidAction space_to_action(const FiniteGroupoid& g, const SpaceAction& sp) {
  FiniteGroupoid hsp = space_as_groupoid(sp.points, sp.point_labels);
  auto v = validate_action_by_isomorphisms(g, hsp, space_action_as_groupoid_action(g, sp));
  REQUIRE(v.ok());
  return *v.value;
}

}  // namespace

TEST_CASE("sd_space_iso certifies the swap example") {
  FiniteGroupoid z2 = cyclic_group(2);
  SpaceAction sp;
  sp.points = 2;
  sp.moment = {0, 0};
  sp.point_labels = {"a", "b"};
  sp.table = {0, 1, 1, 0};
  FiniteGroupoid hsp = space_as_groupoid(2, sp.point_labels);
  GroupoidAction action = space_to_action(z2, sp);
  SdSpaceIso iso = sd_space_iso(z2, hsp, action);
  CHECK(iso.sd.groupoid.size() == 4);
  CHECK(iso.act.groupoid.size() == 4);
  CHECK(iso.certificate.pass);
}

TEST_CASE("sd_space_iso on the trivial group is the identity") {
  FiniteGroupoid triv = trivial_group();
  FiniteGroupoid hsp = space_as_groupoid(3);
  GroupoidAction action = testsupport::trivial_action_on_units(triv, hsp);
  auto v = validate_action_by_isomorphisms(triv, hsp, action);
  REQUIRE(v.ok());
  SdSpaceIso iso = sd_space_iso(triv, hsp, *v.value);
  CHECK(iso.certificate.pass);
  for (Arrow a = 0; a < iso.sd.groupoid.size(); ++a) CHECK(iso.map[a] == a);
}

TEST_CASE("sd_space_iso for Z/3 acting on itself gives the pair groupoid") {
  FiniteGroupoid z3 = cyclic_group(3);
  SpaceAction sp = left_translation_space(z3);
  FiniteGroupoid hsp = space_as_groupoid(3, sp.point_labels);
  GroupoidAction action = space_to_action(z3, sp);
  SdSpaceIso iso = sd_space_iso(z3, hsp, action);
  CHECK(iso.certificate.pass);
  // Both sides are principal: exactly one arrow between each ordered pair of units.
  const FiniteGroupoid& a = iso.act.groupoid;
  CHECK(a.size() == 9);
  CHECK(a.unit_count() == 3);
  for (Arrow u : a.units())
    for (Arrow v2 : a.units()) {
      int count = 0;
      for (Arrow x = 0; x < a.size(); ++x)
        if (a.range(x) == u && a.source(x) == v2) ++count;
      CHECK(count == 1);
    }
}

TEST_CASE("sd_space_iso rejects non-space targets") {
  P2Swap s;
  CHECK_THROWS_AS(sd_space_iso(s.g, s.h, s.action), std::invalid_argument);
}
