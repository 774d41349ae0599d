#include <doctest.h>

#include "gpd/groupoid.hpp"
#include "support.hpp"

using namespace gpd;

TEST_CASE("pair groupoid and cyclic groups validate") {
  CHECK(pair_groupoid(2).size() == 4);
  CHECK(pair_groupoid(3).unit_count() == 3);
  CHECK(cyclic_group(2).unit_count() == 1);
  CHECK(klein_four_group().size() == 4);
  auto v = validate_groupoid(pair_groupoid(2).tables());
  CHECK(v.ok());
}

TEST_CASE("broken inverse is caught with its witness") {
  GroupoidTables t = pair_groupoid(2).tables();
  // inv((0,1)) := (0,1); arrow (0,1) has index 1.
  t.inverse[1] = 1;
  auto v = validate_groupoid(t);
  REQUIRE_FALSE(v.ok());
  bool found = false;
  for (const auto& viol : v.violations)
    if (viol.axiom.find("inv(g)·g ≠ s(g)") != std::string::npos &&
        viol.witness == "(0,1)")
      found = true;
  CHECK(found);
}

TEST_CASE("non-closed multiplication is caught") {
  GroupoidTables t = cyclic_group(2).tables();
  t.mul[1][1] = kUndefined;
  auto v = validate_groupoid(t);
  REQUIRE_FALSE(v.ok());
  CHECK(v.violations[0].axiom == "mul undefined on composable pair");
}

TEST_CASE("associativity failure is caught") {
  GroupoidTables t = cyclic_group(3).tables();
  t.mul[1][1] = 0;  // g1*g1 := e breaks associativity (and identities)
  auto v = validate_groupoid(t);
  REQUIRE_FALSE(v.ok());
  bool assoc = false;
  for (const auto& viol : v.violations)
    if (viol.axiom == "associativity fails") assoc = true;
  CHECK(assoc);
}

TEST_CASE("canonical haar accepts counting weights") {
  for (const FiniteGroupoid& g : {pair_groupoid(3), cyclic_group(4), klein_four_group()}) {
    auto v = canonical_haar(g, std::vector<Rational>(g.size(), Rational(1)));
    REQUIRE(v.ok());
    for (const Rational& w : v->unit_weight) CHECK(w == 1);
  }
}

TEST_CASE("canonical haar derives the per-unit form") {
  FiniteGroupoid p2 = pair_groupoid(2);
  // weight((i,j)) = c(j) with c = (1,3).
  std::vector<Rational> w = {Rational(1), Rational(3), Rational(1), Rational(3)};
  auto v = canonical_haar(p2, w);
  REQUIRE(v.ok());
  CHECK(v->unit_weight[0] == 1);
  CHECK(v->unit_weight[1] == 3);
  for (Arrow h = 0; h < p2.size(); ++h)
    CHECK(v->weight[h] == v->unit_weight[p2.unit_pos(p2.source(h))]);
}

TEST_CASE("canonical haar rejects non-invariant weights with witness") {
  FiniteGroupoid p2 = pair_groupoid(2);
  std::vector<Rational> w = {Rational(1), Rational(1), Rational(1), Rational(2)};
  auto v = canonical_haar(p2, w);
  REQUIRE_FALSE(v.ok());
  CHECK(v.violations[0].axiom == "haar invariance: weight(g·m) ≠ weight(m)");
  CHECK(v.violations[0].witness == "(0,1),(1,1)");
}

TEST_CASE("canonical haar rejects zero weights") {
  FiniteGroupoid z2 = cyclic_group(2);
  auto v = canonical_haar(z2, {Rational(1), Rational(0)});
  REQUIRE_FALSE(v.ok());
  CHECK(v.violations[0].axiom == "haar weight not positive");
}

namespace {

// Left form of the right translation action of G on its own arrow set:
// rho(t) = s(t) and y·t = t y^{-1}.
SpaceAction right_translation_as_space_action(const FiniteGroupoid& g) {
  SpaceAction sp;
  sp.points = g.size();
  sp.moment.resize(g.size());
  for (Arrow t = 0; t < g.size(); ++t) {
    sp.moment[t] = g.source(t);
    sp.point_labels.push_back(g.label(t));
  }
  sp.table.assign(static_cast<size_t>(g.size()) * g.size(), kUndefined);
  for (Arrow y = 0; y < g.size(); ++y)
    for (Arrow t = 0; t < g.size(); ++t)
      if (g.source(y) == g.source(t))
        sp.table[static_cast<size_t>(y) * g.size() + t] = g.mul(t, g.inverse(y));
  return sp;
}

}  // namespace

TEST_CASE("action groupoid of the trivial action on a point") {
  FiniteGroupoid triv = trivial_group();
  SpaceAction sp;
  sp.points = 1;
  sp.moment = {0};
  sp.table = {0};
  auto v = validate_space_action(triv, sp);
  REQUIRE(v.ok());
  ActionGroupoid ag = action_groupoid(triv, *v.value);
  CHECK(ag.groupoid.size() == 1);
  CHECK(ag.groupoid.unit_count() == 1);
}

TEST_CASE("action groupoid of the Z/2 swap on two points") {
  FiniteGroupoid z2 = cyclic_group(2);
  SpaceAction sp;
  sp.points = 2;
  sp.moment = {0, 0};
  sp.point_labels = {"a", "b"};
  sp.table = {0, 1, 1, 0};  // e fixes, g swaps
  auto v = validate_space_action(z2, sp);
  REQUIRE(v.ok());
  ActionGroupoid ag = action_groupoid(z2, *v.value);
  CHECK(ag.groupoid.size() == 4);
  CHECK(ag.groupoid.unit_count() == 2);
  for (Arrow a = 0; a < ag.groupoid.size(); ++a) {
    if (ag.groupoid.is_unit(a)) continue;
    // Every non-unit arrow connects a and b.
    CHECK(ag.groupoid.range(a) != ag.groupoid.source(a));
  }
}

TEST_CASE("space action axiom violations are caught") {
  FiniteGroupoid z2 = cyclic_group(2);
  SpaceAction sp;
  sp.points = 2;
  sp.moment = {0, 0};
  sp.table = {0, 1, 1, 1};  // g no longer acts bijectively: g·a = g·b = b
  auto v = validate_space_action(z2, sp);
  CHECK_FALSE(v.ok());
}

TEST_CASE("right translation groupoid sizes") {
  CHECK(right_translation_groupoid(trivial_group()).h.size() == 1);
  RightTranslation rt = right_translation_groupoid(cyclic_group(2));
  CHECK(rt.h.size() == 4);
  CHECK(rt.h.unit_count() == 2);
}

TEST_CASE("translation equivariance identities hold exhaustively") {
  // Both sides of the displayed identities for w·((x,y,xy)(xy,z,xyz)).
  for (int n : {2, 3}) {
    FiniteGroupoid g = cyclic_group(n);
    RightTranslation rt = right_translation_groupoid(g);
    const FiniteGroupoid& h = rt.h;
    for (Arrow w = 0; w < g.size(); ++w)
      for (Arrow a = 0; a < h.size(); ++a)
        for (Arrow b = 0; b < h.size(); ++b) {
          if (h.mul(a, b) == kUndefined) continue;
          if (rt.act[w][a] == kUndefined) continue;
          Arrow lhs = rt.act[w][h.mul(a, b)];
          REQUIRE(rt.act[w][b] != kUndefined);
          Arrow rhs = h.mul(rt.act[w][a], rt.act[w][b]);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("right translation matches the action groupoid construction") {
  for (int n : {2, 3}) {
    FiniteGroupoid g = cyclic_group(n);
    auto v = validate_space_action(g, right_translation_as_space_action(g));
    REQUIRE(v.ok());
    ActionGroupoid ag = action_groupoid(g, *v.value);
    RightTranslation rt = right_translation_groupoid(g);
    // (y,t) -> (t y^{-1}, y, t).
    std::vector<Arrow> map(ag.groupoid.size(), kUndefined);
    for (Arrow i = 0; i < ag.groupoid.size(); ++i) {
      auto [y, t] = ag.pairs[i];
      map[i] = rt.arrow_of(g.mul(t, g.inverse(y)), y, g.size());
    }
    CHECK(testsupport::is_groupoid_isomorphism(ag.groupoid, rt.h, map));
  }
}

TEST_CASE("restrict_groupoid extracts full subgroupoids") {
  FiniteGroupoid u = disjoint_union(pair_groupoid(2), cyclic_group(3));
  std::vector<Arrow> left;
  for (Arrow a = 0; a < 4; ++a) left.push_back(a);
  SubGroupoid sub = restrict_groupoid(u, left, "test");
  CHECK(sub.groupoid.size() == 4);
  CHECK(sub.groupoid.unit_count() == 2);
  // {g1} of the Z/3 block is not closed: its range unit is missing.
  CHECK_THROWS(restrict_groupoid(u, {5}, "test"));
}
