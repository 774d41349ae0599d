#include "gpd/semidirect.hpp"

#include <stdexcept>

namespace gpd {

SemidirectGroupoid semidirect_groupoid(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                       const GroupoidAction& action) {
  SemidirectGroupoid out;
  out.g_size = g.size();
  out.pair_index.assign(static_cast<size_t>(h.size()) * g.size(), kUndefined);
  for (Arrow a = 0; a < h.size(); ++a)
    for (Arrow x = 0; x < g.size(); ++x) {
      if (action.moment[a] != g.range(x)) continue;
      out.pair_index[static_cast<size_t>(a) * g.size() + x] =
          static_cast<Arrow>(out.pairs.size());
      out.pairs.emplace_back(a, x);
    }
  const int n = static_cast<int>(out.pairs.size());
  GroupoidTables t;
  t.unit.assign(n, false);
  t.range.resize(n);
  t.source.resize(n);
  t.inverse.resize(n);
  t.mul.assign(n, std::vector<Arrow>(n, kUndefined));
  t.labels.resize(n);
  for (int a = 0; a < n; ++a) {
    auto [ha, x] = out.pairs[a];
    t.labels[a] = "(" + h.label(ha) + ";" + g.label(x) + ")";
    t.unit[a] = h.is_unit(ha) && g.is_unit(x);
    t.range[a] = out.arrow_of(h.range(ha), g.range(x));
    t.source[a] = out.arrow_of(action.apply(g.inverse(x), h.source(ha)), g.source(x));
    t.inverse[a] = out.arrow_of(action.apply(g.inverse(x), h.inverse(ha)), g.inverse(x));
  }
  // Composability per the definition: (h,x)(k,y) defined when s(h) = x·r(k);
  // the validator cross-checks this against the stored source/range tables.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto [ha, x] = out.pairs[a];
      auto [kb, y] = out.pairs[b];
      if (action.moment[kb] != g.source(x)) continue;
      if (h.source(ha) != action.apply(x, h.range(kb))) continue;
      t.mul[a][b] = out.arrow_of(h.mul(ha, action.apply(x, kb)), g.mul(x, y));
    }
  out.groupoid = must_validate(t, "semidirect_groupoid");
  return out;
}

Validated<HaarSystem> semidirect_haar(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                      const GroupoidAction& action, const HaarSystem& haar_h,
                                      const HaarSystem& haar_g, const SemidirectGroupoid& sd) {
  Validated<HaarSystem> out;
  InvarianceCheck inv = check_invariant_haar(g, h, action, haar_h);
  if (!inv.invariant) {
    out.violations.push_back({"semidirect_haar requires an invariant Haar system on H",
                              "w(x·u) ≠ w(u) at x=" + g.label(inv.x) + ", u=" + h.label(inv.unit)});
    return out;
  }
  std::vector<Rational> w(sd.pairs.size());
  for (size_t a = 0; a < sd.pairs.size(); ++a)
    w[a] = haar_h.weight[sd.pairs[a].first] * haar_g.weight[sd.pairs[a].second];
  // Lemma content: the product weights are left invariant on H x| G.
  return canonical_haar(sd.groupoid, std::move(w));
}

FiniteGroupoid space_as_groupoid(int points, const std::vector<std::string>& labels) {
  GroupoidTables t;
  t.unit.assign(points, true);
  t.range.resize(points);
  t.source.resize(points);
  t.inverse.resize(points);
  t.mul.assign(points, std::vector<Arrow>(points, kUndefined));
  for (int i = 0; i < points; ++i) {
    t.range[i] = i;
    t.source[i] = i;
    t.inverse[i] = i;
    t.mul[i][i] = i;
  }
  t.labels = labels;
  return must_validate(t, "space_as_groupoid");
}

GroupoidAction space_action_as_groupoid_action(const FiniteGroupoid& g,
                                               const SpaceAction& space) {
  GroupoidAction a;
  a.target_size = space.points;
  a.moment = space.moment;
  a.table = std::vector<Arrow>(space.table.begin(), space.table.end());
  return a;
}

SdSpaceIso sd_space_iso(const FiniteGroupoid& g, const FiniteGroupoid& h,
                        const GroupoidAction& action) {
  for (Arrow t = 0; t < h.size(); ++t)
    if (!h.is_unit(t))
      throw std::invalid_argument("sd_space_iso: input H has non-unit arrows: " + h.label(t));
  SpaceAction space;
  space.points = h.size();
  space.moment = action.moment;
  space.table = action.table;
  for (Arrow t = 0; t < h.size(); ++t) space.point_labels.push_back(h.label(t));

  SdSpaceIso out;
  out.sd = semidirect_groupoid(g, h, action);
  out.act = action_groupoid(g, space);

  const FiniteGroupoid& a = out.sd.groupoid;
  const FiniteGroupoid& b = out.act.groupoid;
  Certificate& c = out.certificate;
  c.name = "sd_space_iso";
  c.require(a.size() == b.size(), "arrow counts differ");

  out.map.assign(a.size(), kUndefined);
  std::vector<bool> hit(b.size(), false);
  for (int i = 0; i < a.size(); ++i) {
    auto [hpt, x] = out.sd.pairs[i];
    int img = out.act.arrow_of(x, space.apply(g.inverse(x), hpt));
    out.map[i] = img;
    c.require(img != kUndefined && !hit[img], "not injective at " + a.label(i));
    if (img != kUndefined) hit[img] = true;
  }
  if (!c.pass) return out;

  for (int i = 0; i < a.size(); ++i) {
    c.require(out.map[a.range(i)] == b.range(out.map[i]), "range mismatch at " + a.label(i));
    c.require(out.map[a.source(i)] == b.source(out.map[i]), "source mismatch at " + a.label(i));
    c.require(out.map[a.inverse(i)] == b.inverse(out.map[i]),
              "inverse mismatch at " + a.label(i));
  }
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      Arrow p = a.mul(i, j);
      Arrow q = b.mul(out.map[i], out.map[j]);
      bool same = (p == kUndefined && q == kUndefined) ||
                  (p != kUndefined && q != kUndefined && out.map[p] == q);
      c.require(same, "product mismatch at " + a.label(i) + "," + a.label(j));
    }
  return out;
}

}  // namespace gpd
