#include "gpd/action.hpp"

#include <stdexcept>

namespace gpd {

Validated<GroupoidAction> validate_action_by_isomorphisms(const FiniteGroupoid& g,
                                                          const FiniteGroupoid& h,
                                                          GroupoidAction candidate) {
  if (candidate.target_size != h.size() ||
      static_cast<int>(candidate.moment.size()) != h.size() ||
      candidate.table.size() != static_cast<size_t>(g.size()) * h.size())
    throw std::invalid_argument("groupoid action: table size mismatch");

  Validated<GroupoidAction> out;
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    out.violations.push_back({axiom, witness});
  };

  for (Arrow a = 0; a < h.size(); ++a)
    if (!g.is_unit(candidate.moment[a])) fail("moment value is not a G-unit", h.label(a));
  if (!out.violations.empty()) return out;

  // Fibre-closedness: rho is constant on r/s (so each fibre is a reduction
  // of H, in particular a subgroupoid).
  for (Arrow a = 0; a < h.size(); ++a) {
    if (candidate.moment[h.range(a)] != candidate.moment[a] ||
        candidate.moment[h.source(a)] != candidate.moment[a])
      fail("fiber not subgroupoid: moment differs on r(h), h, s(h)", h.label(a));
  }

  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow a = 0; a < h.size(); ++a) {
      bool should = candidate.defined(g, x, a);
      Arrow img = candidate.apply(x, a);
      if (should && (img < 0 || img >= h.size()))
        fail("action table undefined on its domain", g.label(x) + "," + h.label(a));
      if (!should && img != kUndefined)
        fail("action table defined off its domain", g.label(x) + "," + h.label(a));
    }
  if (!out.violations.empty()) return out;

  for (Arrow a = 0; a < h.size(); ++a)
    if (candidate.apply(candidate.moment[a], a) != a)
      fail("rho(h)·h ≠ h", h.label(a));

  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow a = 0; a < h.size(); ++a) {
      if (!candidate.defined(g, x, a)) continue;
      Arrow xa = candidate.apply(x, a);
      if (candidate.moment[xa] != g.range(x)) {
        fail("rho(x·h) ≠ r(x)", g.label(x) + "," + h.label(a));
        continue;
      }
      for (Arrow w = 0; w < g.size(); ++w) {
        if (g.source(w) != g.range(x)) continue;
        if (candidate.apply(w, xa) != candidate.apply(g.mul(w, x), a))
          fail("w·(x·h) ≠ (wx)·h", g.label(w) + "," + g.label(x) + "," + h.label(a));
      }
    }

  // Each x acts as a groupoid isomorphism of H_{s(x)} onto H_{r(x)}.
  for (Arrow x = 0; x < g.size(); ++x) {
    std::vector<bool> hit(h.size(), false);
    for (Arrow a = 0; a < h.size(); ++a) {
      if (!candidate.defined(g, x, a)) continue;
      Arrow xa = candidate.apply(x, a);
      if (hit[xa]) fail("x· not injective", g.label(x) + "," + h.label(a));
      hit[xa] = true;
      if (candidate.apply(g.inverse(x), xa) != a)
        fail("x⁻¹·(x·h) ≠ h", g.label(x) + "," + h.label(a));
      if (h.is_unit(a) != h.is_unit(xa))
        fail("H⁰ not invariant", g.label(x) + "," + h.label(a));
      if (candidate.apply(x, h.range(a)) != h.range(xa))
        fail("r(x·h) ≠ x·r(h)", g.label(x) + "," + h.label(a));
      if (candidate.apply(x, h.source(a)) != h.source(xa))
        fail("s(x·h) ≠ x·s(h)", g.label(x) + "," + h.label(a));
      if (candidate.apply(x, h.inverse(a)) != h.inverse(xa))
        fail("x·(h⁻¹) ≠ (x·h)⁻¹", g.label(x) + "," + h.label(a));
    }
    // Surjectivity onto the target fibre.
    for (Arrow b = 0; b < h.size(); ++b)
      if (candidate.moment[b] == g.range(x) && !hit[b])
        fail("x· not onto H_{r(x)}", g.label(x) + "," + h.label(b));
    // Multiplicativity on every composable pair of the source fibre.
    for (Arrow a = 0; a < h.size(); ++a) {
      if (!candidate.defined(g, x, a)) continue;
      for (Arrow b = 0; b < h.size(); ++b) {
        if (h.mul(a, b) == kUndefined || !candidate.defined(g, x, b)) continue;
        Arrow xa = candidate.apply(x, a);
        Arrow xb = candidate.apply(x, b);
        Arrow lhs = candidate.apply(x, h.mul(a, b));
        if (h.mul(xa, xb) != lhs)
          fail("not multiplicative: x·(hk) ≠ (x·h)(x·k)",
               g.label(x) + "," + h.label(a) + "," + h.label(b));
      }
    }
  }

  if (out.violations.empty()) out.value = std::move(candidate);
  return out;
}

InvarianceCheck check_invariant_haar(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                     const GroupoidAction& action, const HaarSystem& haar) {
  InvarianceCheck result;
  result.invariant = true;
  for (Arrow x = 0; x < g.size() && result.invariant; ++x)
    for (Arrow u : h.units()) {
      if (!action.defined(g, x, u)) continue;
      Arrow xu = action.apply(x, u);
      if (haar.weight[u] != haar.weight[xu]) {
        result = {false, x, u};
        break;
      }
    }

  // Raw form of the invariance identity, with every indicator function f:
  // sum over r(k)=v of f(x·k) weight(k)  ==  sum over r(k)=x·v of f(k) weight(k).
  bool raw = true;
  for (Arrow x = 0; x < g.size() && raw; ++x)
    for (Arrow v : h.units()) {
      if (!action.defined(g, x, v)) continue;
      Arrow xv = action.apply(x, v);
      for (Arrow target = 0; target < h.size() && raw; ++target) {
        Rational lhs(0), rhs(0);
        for (Arrow k : h.range_fiber(h.unit_pos(v)))
          if (action.apply(x, k) == target) lhs += haar.weight[k];
        if (h.range(target) == xv) rhs = haar.weight[target];
        if (lhs != rhs) raw = false;
      }
    }
  if (raw != result.invariant)
    throw std::logic_error("check_invariant_haar: per-unit reduction disagrees with the raw "
                           "integral identity");
  return result;
}

TranslationAction translation_action(const FiniteGroupoid& g) {
  TranslationAction out;
  out.raw = right_translation_groupoid(g);
  out.h = out.raw.h;
  GroupoidAction a;
  a.target_size = out.h.size();
  a.moment = out.raw.moment;
  a.table.assign(static_cast<size_t>(g.size()) * out.h.size(), kUndefined);
  for (Arrow w = 0; w < g.size(); ++w)
    for (Arrow t = 0; t < out.h.size(); ++t)
      a.table[static_cast<size_t>(w) * out.h.size() + t] = out.raw.act[w][t];
  auto v = validate_action_by_isomorphisms(g, out.h, std::move(a));
  if (!v.ok())
    throw std::logic_error("translation_action: failed validation: " +
                           violations_to_string(v.violations));
  out.action = std::move(*v.value);
  return out;
}

std::vector<Arrow> fiber_arrows(const GroupoidAction& action, Arrow g_unit) {
  std::vector<Arrow> out;
  for (Arrow a = 0; a < action.target_size; ++a)
    if (action.moment[a] == g_unit) out.push_back(a);
  return out;
}

SubGroupoid fiber_subgroupoid(const FiniteGroupoid& h, const GroupoidAction& action,
                              Arrow g_unit) {
  return restrict_groupoid(h, fiber_arrows(action, g_unit), "fiber_subgroupoid");
}

}  // namespace gpd
