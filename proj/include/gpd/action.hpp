#pragma once

#include "gpd/groupoid.hpp"

namespace gpd {

// Action of G on another groupoid H by isomorphisms: the moment map is
// constant on fibres (making each fibre H_u a subgroupoid) and every arrow
// x acts as a groupoid isomorphism H_{s(x)} -> H_{r(x)}. Pure index data;
// pass G and H alongside.
struct GroupoidAction {
  std::vector<Arrow> moment;  // H-arrow -> unit arrow of G
  std::vector<Arrow> table;   // x * |H| + h -> H-arrow, or kUndefined
  int target_size = 0;

  bool defined(const FiniteGroupoid& g, Arrow x, Arrow h) const {
    return moment[h] == g.source(x);
  }
  Arrow apply(Arrow x, Arrow h) const {
    return table[static_cast<size_t>(x) * target_size + h];
  }
};

// Exhaustive check of all action-by-isomorphisms axioms; violations carry
// the witnessing arrows. Partial tables (undefined where s(x) = rho(h)) are
// rejected.
Validated<GroupoidAction> validate_action_by_isomorphisms(const FiniteGroupoid& g,
                                                          const FiniteGroupoid& h,
                                                          GroupoidAction candidate);

struct InvarianceCheck {
  bool invariant = false;
  // Witness when not invariant: w(x·u) != w(u).
  Arrow x = kUndefined;
  Arrow unit = kUndefined;
};

// Invariance of a Haar system on H under the G-action. Checked through the
// exact per-unit reduction w(x·u) = w(u); the raw integral identity with
// every indicator function is re-checked against the reduction, which guards
// the reduction itself.
InvarianceCheck check_invariant_haar(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                     const GroupoidAction& action, const HaarSystem& haar);

// The translation action of G on its right-translation groupoid, wrapped
// and validated as a GroupoidAction.
struct TranslationAction {
  FiniteGroupoid h;
  GroupoidAction action;
  RightTranslation raw;
};

TranslationAction translation_action(const FiniteGroupoid& g);

// Arrows of the fibre H_u = moment^{-1}(u), in index order.
std::vector<Arrow> fiber_arrows(const GroupoidAction& action, Arrow g_unit);

// The fibre H_u as a groupoid in its own right.
SubGroupoid fiber_subgroupoid(const FiniteGroupoid& h, const GroupoidAction& action,
                              Arrow g_unit);

}  // namespace gpd
