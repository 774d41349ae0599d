#pragma once

#include "gpd/action.hpp"
#include "gpd/certificate.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

// The semidirect product H x| G for an action of G on H by isomorphisms:
// arrows are pairs (h,x) with rho(h) = r(x), product
// (h,x)(k,y) = (h(x·k), xy) defined when s(h) = x·r(k), inverse
// (h,x)^{-1} = (x^{-1}·h^{-1}, x^{-1}). Units are stored as pairs (v,rho(v))
// and identified with H⁰ through unit_of_hunit.
struct SemidirectGroupoid {
  FiniteGroupoid groupoid;
  std::vector<std::pair<Arrow, Arrow>> pairs;  // arrow -> (h, x)
  std::vector<Arrow> pair_index;               // h * |G| + x -> arrow, or kUndefined
  int g_size = 0;

  Arrow arrow_of(Arrow h, Arrow x) const {
    return pair_index[static_cast<size_t>(h) * g_size + x];
  }
  // The unit (v, rho(v)) over an H-unit v.
  Arrow unit_of_hunit(Arrow v, const std::vector<Arrow>& moment) const {
    return arrow_of(v, moment[v]);
  }
};

// Builds H x| G and re-validates it through validate_groupoid; the stored
// range/source tables are cross-checked against the composability rule
// s(h) = x·r(k) used to fill the product table.
SemidirectGroupoid semidirect_groupoid(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                       const GroupoidAction& action);

// Product Haar system weight(h,x) = weight_H(h)·weight_G(x). Requires the
// invariance of haar_h under the action and re-runs canonical_haar on the
// output rather than trusting the construction.
Validated<HaarSystem> semidirect_haar(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                      const GroupoidAction& action, const HaarSystem& haar_h,
                                      const HaarSystem& haar_g, const SemidirectGroupoid& sd);

// For a space H, the map (h,x) -> (x, x^{-1}·h) from H x| G onto the action
// groupoid G |x H, verified arrow by arrow to preserve r, s, inverse and
// multiplication.
struct SdSpaceIso {
  SemidirectGroupoid sd;
  ActionGroupoid act;
  std::vector<Arrow> map;  // sd arrow -> action groupoid arrow
  Certificate certificate;
};

// Throws std::invalid_argument if h has non-unit arrows.
SdSpaceIso sd_space_iso(const FiniteGroupoid& g, const FiniteGroupoid& h,
                        const GroupoidAction& action);

// A finite set viewed as a groupoid of units only.
FiniteGroupoid space_as_groupoid(int points, const std::vector<std::string>& labels = {});

// A SpaceAction on points promoted to a GroupoidAction on the unit groupoid.
GroupoidAction space_action_as_groupoid_action(const FiniteGroupoid& g,
                                               const SpaceAction& space);

}  // namespace gpd
