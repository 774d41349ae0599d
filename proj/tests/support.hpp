#pragma once

// Shared builders for the hand-worked examples the tests revolve around.

#include <string>
#include <vector>

#include "gpd/action.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/semidirect.hpp"

namespace gpd::testsupport {

// Z/2 = {e,g} acting on the pair groupoid P2 by swapping the two points:
// g·(i,j) = (1-i, 1-j), moment everything to the single unit of Z/2.
struct P2Swap {
  FiniteGroupoid g = cyclic_group(2);
  FiniteGroupoid h = pair_groupoid(2);
  GroupoidAction action;

  P2Swap() {
    GroupoidAction a;
    a.target_size = h.size();
    a.moment.assign(h.size(), 0);
    a.table.assign(static_cast<size_t>(g.size()) * h.size(), kUndefined);
    auto id = [](int i, int j) { return i * 2 + j; };
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        a.table[id(i, j)] = id(i, j);                          // e fixes
        a.table[h.size() + id(i, j)] = id(1 - i, 1 - j);       // g swaps
      }
    auto v = validate_action_by_isomorphisms(g, h, std::move(a));
    if (!v.ok()) throw std::logic_error("P2Swap: " + violations_to_string(v.violations));
    action = std::move(*v.value);
  }
};

// The trivial action of a groupoid on itself restricted to units: every
// fibre is one unit, only units act.
inline GroupoidAction trivial_action_on_units(const FiniteGroupoid& g,
                                              const FiniteGroupoid& h_units,
                                              Arrow g_unit = 0) {
  GroupoidAction a;
  a.target_size = h_units.size();
  a.moment.assign(h_units.size(), g_unit);
  a.table.assign(static_cast<size_t>(g.size()) * h_units.size(), kUndefined);
  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow t = 0; t < h_units.size(); ++t)
      if (g.source(x) == g_unit)
        a.table[static_cast<size_t>(x) * h_units.size() + t] = t;
  return a;
}

// Action of the trivial group on an arbitrary groupoid H (every arrow fixed).
inline GroupoidAction trivial_group_action(const FiniteGroupoid& triv,
                                           const FiniteGroupoid& h) {
  GroupoidAction a;
  a.target_size = h.size();
  a.moment.assign(h.size(), 0);
  a.table.resize(h.size());
  for (Arrow t = 0; t < h.size(); ++t) a.table[t] = t;
  (void)triv;
  return a;
}

inline bool is_groupoid_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b,
                                    const std::vector<Arrow>& map) {
  if (a.size() != b.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Arrow i = 0; i < a.size(); ++i) {
    if (map[i] < 0 || map[i] >= b.size() || hit[map[i]]) return false;
    hit[map[i]] = true;
  }
  for (Arrow i = 0; i < a.size(); ++i) {
    if (map[a.range(i)] != b.range(map[i])) return false;
    if (map[a.source(i)] != b.source(map[i])) return false;
    if (map[a.inverse(i)] != b.inverse(map[i])) return false;
    if (a.is_unit(i) != b.is_unit(map[i])) return false;
    for (Arrow j = 0; j < a.size(); ++j) {
      Arrow p = a.mul(i, j);
      Arrow q = b.mul(map[i], map[j]);
      if (p == kUndefined) {
        if (q != kUndefined) return false;
      } else if (q == kUndefined || map[p] != q) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace gpd::testsupport
