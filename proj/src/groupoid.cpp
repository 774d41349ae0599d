#include "gpd/groupoid.hpp"

#include <sstream>
#include <stdexcept>

namespace gpd {

std::string violations_to_string(const std::vector<Violation>& vs) {
  std::ostringstream os;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) os << "; ";
    os << vs[i].axiom << " [" << vs[i].witness << "]";
  }
  return os.str();
}

namespace {

void check_index_consistency(const GroupoidTables& t) {
  const int n = t.size();
  auto in_range = [n](Arrow a) { return a >= 0 && a < n; };
  if (static_cast<int>(t.unit.size()) != n || static_cast<int>(t.source.size()) != n ||
      static_cast<int>(t.inverse.size()) != n || static_cast<int>(t.mul.size()) != n)
    throw std::invalid_argument("groupoid tables: inconsistent sizes");
  for (int g = 0; g < n; ++g) {
    if (!in_range(t.range[g]) || !in_range(t.source[g]) || !in_range(t.inverse[g]))
      throw std::invalid_argument("groupoid tables: arrow index out of range");
    if (static_cast<int>(t.mul[g].size()) != n)
      throw std::invalid_argument("groupoid tables: mul row size mismatch");
    for (int h = 0; h < n; ++h) {
      Arrow m = t.mul[g][h];
      if (m != kUndefined && !in_range(m))
        throw std::invalid_argument("groupoid tables: mul entry out of range");
    }
  }
  if (!t.labels.empty() && static_cast<int>(t.labels.size()) != n)
    throw std::invalid_argument("groupoid tables: label table size mismatch");
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = "a" + std::to_string(i);
  return out;
}

}  // namespace

Validated<FiniteGroupoid> validate_groupoid(const GroupoidTables& candidate) {
  check_index_consistency(candidate);
  GroupoidTables t = candidate;
  if (t.labels.empty()) t.labels = default_labels(t.size());
  const int n = t.size();

  Validated<FiniteGroupoid> out;
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    out.violations.push_back({axiom, witness});
  };
  auto lbl = [&](Arrow g) { return t.labels[g]; };

  for (int u = 0; u < n; ++u) {
    if (!t.unit[u]) continue;
    if (t.range[u] != u || t.source[u] != u) fail("r(u)=s(u)=u fails for unit", lbl(u));
  }
  for (int g = 0; g < n; ++g) {
    if (!t.unit[t.range[g]]) fail("r(g) is not a unit", lbl(g));
    if (!t.unit[t.source[g]]) fail("s(g) is not a unit", lbl(g));
  }
  // Multiplication domain must be exactly the composable pairs.
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      bool comp = t.source[g] == t.range[h];
      bool defined = t.mul[g][h] != kUndefined;
      if (comp && !defined) fail("mul undefined on composable pair", lbl(g) + "," + lbl(h));
      if (!comp && defined) fail("mul defined on non-composable pair", lbl(g) + "," + lbl(h));
    }
  auto mul = [&](Arrow g, Arrow h) -> Arrow {
    if (t.source[g] != t.range[h]) return kUndefined;
    return t.mul[g][h];
  };
  for (int g = 0; g < n; ++g) {
    Arrow lg = mul(t.range[g], g);
    Arrow rg = mul(g, t.source[g]);
    if (lg != g) fail("r(g)·g ≠ g", lbl(g));
    if (rg != g) fail("g·s(g) ≠ g", lbl(g));
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      Arrow gh = mul(g, h);
      if (gh == kUndefined) continue;
      if (t.range[gh] != t.range[g]) fail("r(gh) ≠ r(g)", lbl(g) + "," + lbl(h));
      if (t.source[gh] != t.source[h]) fail("s(gh) ≠ s(h)", lbl(g) + "," + lbl(h));
    }
  // Associativity over every exhaustively enumerated composable triple.
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      Arrow gh = mul(g, h);
      if (gh == kUndefined) continue;
      for (int k = 0; k < n; ++k) {
        Arrow hk = mul(h, k);
        if (hk == kUndefined) continue;
        if (mul(gh, k) != mul(g, hk))
          fail("associativity fails", lbl(g) + "," + lbl(h) + "," + lbl(k));
      }
    }
  for (int g = 0; g < n; ++g) {
    if (t.inverse[t.inverse[g]] != g) fail("inv(inv(g)) ≠ g", lbl(g));
    if (mul(g, t.inverse[g]) != t.range[g]) fail("g·inv(g) ≠ r(g)", lbl(g));
    if (mul(t.inverse[g], g) != t.source[g]) fail("inv(g)·g ≠ s(g)", lbl(g));
  }

  if (!out.violations.empty()) return out;

  FiniteGroupoid g;
  g.tables_ = std::move(t);
  g.unit_pos_.assign(n, kUndefined);
  for (int u = 0; u < n; ++u)
    if (g.tables_.unit[u]) {
      g.unit_pos_[u] = static_cast<int>(g.units_.size());
      g.units_.push_back(u);
    }
  g.range_fibers_.resize(g.units_.size());
  for (int a = 0; a < n; ++a) g.range_fibers_[g.unit_pos_[g.tables_.range[a]]].push_back(a);
  out.value = std::move(g);
  return out;
}

FiniteGroupoid must_validate(const GroupoidTables& tables, const std::string& context) {
  auto v = validate_groupoid(tables);
  if (!v.ok())
    throw std::logic_error(context + ": constructed groupoid fails validation: " +
                           violations_to_string(v.violations));
  return std::move(*v.value);
}

Validated<HaarSystem> canonical_haar(const FiniteGroupoid& g, std::vector<Rational> weights) {
  Validated<HaarSystem> out;
  if (static_cast<int>(weights.size()) != g.size())
    throw std::invalid_argument("canonical_haar: weight table size mismatch");
  for (int h = 0; h < g.size(); ++h)
    if (weights[h] <= 0) out.violations.push_back({"haar weight not positive", g.label(h)});
  if (!out.violations.empty()) return out;
  // Left invariance: weight(g m) = weight(m) on every composable pair.
  for (int a = 0; a < g.size(); ++a)
    for (int m = 0; m < g.size(); ++m) {
      if (!g.composable(a, m)) continue;
      if (weights[g.mul(a, m)] != weights[m]) {
        out.violations.push_back({"haar invariance: weight(g·m) ≠ weight(m)",
                                  g.label(a) + "," + g.label(m)});
      }
    }
  if (!out.violations.empty()) return out;
  HaarSystem hs;
  hs.weight = std::move(weights);
  hs.unit_weight.reserve(g.unit_count());
  for (Arrow u : g.units()) hs.unit_weight.push_back(hs.weight[u]);
  // Derived canonical form (implied by invariance; asserted for safety).
  for (int h = 0; h < g.size(); ++h)
    if (hs.weight[h] != hs.unit_weight[g.unit_pos(g.source(h))])
      throw std::logic_error("canonical_haar: weight(h) != w(s(h)) after invariance check");
  out.value = std::move(hs);
  return out;
}

HaarSystem counting_haar(const FiniteGroupoid& g) {
  auto v = canonical_haar(g, std::vector<Rational>(g.size(), Rational(1)));
  return std::move(*v.value);
}

Validated<SpaceAction> validate_space_action(const FiniteGroupoid& g, SpaceAction candidate) {
  Validated<SpaceAction> out;
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    out.violations.push_back({axiom, witness});
  };
  if (static_cast<int>(candidate.moment.size()) != candidate.points ||
      static_cast<int>(candidate.table.size()) !=
          static_cast<size_t>(g.size()) * candidate.points)
    throw std::invalid_argument("space action: table size mismatch");
  if (candidate.point_labels.empty()) {
    for (int t = 0; t < candidate.points; ++t)
      candidate.point_labels.push_back("t" + std::to_string(t));
  }
  auto plbl = [&](int t) { return candidate.point_labels[t]; };

  for (int t = 0; t < candidate.points; ++t)
    if (!g.is_unit(candidate.moment[t])) fail("moment value is not a unit", plbl(t));
  if (!out.violations.empty()) return out;

  for (Arrow x = 0; x < g.size(); ++x)
    for (int t = 0; t < candidate.points; ++t) {
      bool should = candidate.defined(g, x, t);
      int img = candidate.apply(x, t);
      if (should && (img < 0 || img >= candidate.points))
        fail("action undefined on its domain", g.label(x) + "," + plbl(t));
      if (!should && img != kUndefined)
        fail("action defined off its domain", g.label(x) + "," + plbl(t));
    }
  if (!out.violations.empty()) return out;

  for (int t = 0; t < candidate.points; ++t)
    if (candidate.apply(candidate.moment[t], t) != t) fail("rho(t)·t ≠ t", plbl(t));
  for (Arrow x = 0; x < g.size(); ++x)
    for (int t = 0; t < candidate.points; ++t) {
      if (!candidate.defined(g, x, t)) continue;
      int xt = candidate.apply(x, t);
      if (candidate.moment[xt] != g.range(x)) {
        fail("rho(x·t) ≠ r(x)", g.label(x) + "," + plbl(t));
        continue;
      }
      for (Arrow w = 0; w < g.size(); ++w) {
        if (g.source(w) != g.range(x)) continue;
        if (candidate.apply(w, xt) != candidate.apply(g.mul(w, x), t))
          fail("w·(x·t) ≠ (wx)·t", g.label(w) + "," + g.label(x) + "," + plbl(t));
      }
    }
  if (out.violations.empty()) out.value = std::move(candidate);
  return out;
}

ActionGroupoid action_groupoid(const FiniteGroupoid& g, const SpaceAction& action) {
  ActionGroupoid out;
  out.points = action.points;
  out.pair_index.assign(static_cast<size_t>(g.size()) * action.points, kUndefined);
  for (Arrow x = 0; x < g.size(); ++x)
    for (int t = 0; t < action.points; ++t) {
      if (!action.defined(g, x, t)) continue;
      out.pair_index[static_cast<size_t>(x) * action.points + t] =
          static_cast<Arrow>(out.pairs.size());
      out.pairs.emplace_back(x, t);
    }
  const int n = static_cast<int>(out.pairs.size());
  GroupoidTables t;
  t.unit.assign(n, false);
  t.range.assign(n, kUndefined);
  t.source.assign(n, kUndefined);
  t.inverse.assign(n, kUndefined);
  t.mul.assign(n, std::vector<Arrow>(n, kUndefined));
  t.labels.resize(n);
  for (int a = 0; a < n; ++a) {
    auto [x, pt] = out.pairs[a];
    t.labels[a] = "(" + g.label(x) + "," + action.point_labels[pt] + ")";
    t.unit[a] = g.is_unit(x);
    int xt = action.apply(x, pt);
    t.range[a] = out.arrow_of(g.range(x), xt);
    t.source[a] = out.arrow_of(g.source(x), pt);
    t.inverse[a] = out.arrow_of(g.inverse(x), xt);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto [x, pt] = out.pairs[a];
      auto [y, ps] = out.pairs[b];
      // (x,t)(y,s) = (xy, s) when t = y·s.
      if (g.source(x) != g.range(y)) continue;
      if (pt != action.apply(y, ps)) continue;
      t.mul[a][b] = out.arrow_of(g.mul(x, y), ps);
    }
  out.groupoid = must_validate(t, "action_groupoid");
  return out;
}

RightTranslation right_translation_groupoid(const FiniteGroupoid& g) {
  RightTranslation out;
  const int n = g.size();
  out.triple_index.assign(static_cast<size_t>(n) * n, kUndefined);
  for (Arrow x = 0; x < n; ++x)
    for (Arrow y = 0; y < n; ++y) {
      if (g.source(x) != g.range(y)) continue;
      out.triple_index[static_cast<size_t>(x) * n + y] = static_cast<Arrow>(out.triples.size());
      out.triples.emplace_back(x, y);
    }
  const int m = static_cast<int>(out.triples.size());
  GroupoidTables t;
  t.unit.assign(m, false);
  t.range.assign(m, kUndefined);
  t.source.assign(m, kUndefined);
  t.inverse.assign(m, kUndefined);
  t.mul.assign(m, std::vector<Arrow>(m, kUndefined));
  t.labels.resize(m);
  for (int a = 0; a < m; ++a) {
    auto [x, y] = out.triples[a];
    Arrow xy = g.mul(x, y);
    t.labels[a] = "(" + g.label(x) + "," + g.label(y) + "," + g.label(xy) + ")";
    t.unit[a] = g.is_unit(y);
    // r(x,y,xy) = (x, s(x), x) and s(x,y,xy) = (xy, s(y), xy).
    t.range[a] = out.arrow_of(x, g.source(x), n);
    t.source[a] = out.arrow_of(xy, g.source(y), n);
    t.inverse[a] = out.arrow_of(xy, g.inverse(y), n);
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto [x, y] = out.triples[a];
      auto [x2, y2] = out.triples[b];
      // (x,y,xy)(xy,z,xyz) = (x,yz,xyz).
      if (x2 != g.mul(x, y)) continue;
      t.mul[a][b] = out.arrow_of(x, g.mul(y, y2), n);
    }
  out.h = must_validate(t, "right_translation_groupoid");

  out.moment.resize(m);
  for (int a = 0; a < m; ++a) out.moment[a] = g.range(out.triples[a].first);
  out.act.assign(n, std::vector<Arrow>(m, kUndefined));
  for (Arrow w = 0; w < n; ++w)
    for (int a = 0; a < m; ++a) {
      auto [x, y] = out.triples[a];
      if (g.source(w) != g.range(x)) continue;  // s(w) = rho(x,y,xy)
      out.act[w][a] = out.arrow_of(g.mul(w, x), y, n);
    }
  return out;
}

SubGroupoid restrict_groupoid(const FiniteGroupoid& g, const std::vector<Arrow>& arrows,
                              const std::string& context) {
  SubGroupoid out;
  out.to_parent = arrows;
  out.from_parent.assign(g.size(), kUndefined);
  for (size_t i = 0; i < arrows.size(); ++i) out.from_parent[arrows[i]] = static_cast<int>(i);
  const int m = static_cast<int>(arrows.size());
  GroupoidTables t;
  t.unit.resize(m);
  t.range.resize(m);
  t.source.resize(m);
  t.inverse.resize(m);
  t.mul.assign(m, std::vector<Arrow>(m, kUndefined));
  t.labels.resize(m);
  auto local = [&](Arrow parent, const char* what) {
    Arrow l = out.from_parent[parent];
    if (l == kUndefined)
      throw std::invalid_argument(context + ": arrow subset not closed under " +
                                  std::string(what));
    return l;
  };
  for (int i = 0; i < m; ++i) {
    Arrow a = arrows[i];
    t.unit[i] = g.is_unit(a);
    t.labels[i] = g.label(a);
    t.range[i] = local(g.range(a), "range");
    t.source[i] = local(g.source(a), "source");
    t.inverse[i] = local(g.inverse(a), "inverse");
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Arrow p = g.mul(arrows[i], arrows[j]);
      if (p != kUndefined) t.mul[i][j] = local(p, "multiplication");
    }
  out.groupoid = must_validate(t, context);
  return out;
}

namespace {

FiniteGroupoid build_group(int n, const std::string& prefix,
                           Arrow (*mulf)(Arrow, Arrow, int), Arrow (*invf)(Arrow, int),
                           const std::vector<std::string>* names = nullptr) {
  GroupoidTables t;
  t.unit.assign(n, false);
  t.unit[0] = true;
  t.range.assign(n, 0);
  t.source.assign(n, 0);
  t.inverse.resize(n);
  t.mul.assign(n, std::vector<Arrow>(n, kUndefined));
  t.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    t.inverse[i] = invf(i, n);
    t.labels[i] = names ? (*names)[i] : prefix + std::to_string(i);
    for (int j = 0; j < n; ++j) t.mul[i][j] = mulf(i, j, n);
  }
  return must_validate(t, "build_group");
}

}  // namespace

FiniteGroupoid pair_groupoid(int n) {
  const int m = n * n;
  GroupoidTables t;
  t.unit.assign(m, false);
  t.range.resize(m);
  t.source.resize(m);
  t.inverse.resize(m);
  t.mul.assign(m, std::vector<Arrow>(m, kUndefined));
  t.labels.resize(m);
  auto id = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = id(i, j);
      t.unit[a] = i == j;
      t.range[a] = id(i, i);
      t.source[a] = id(j, j);
      t.inverse[a] = id(j, i);
      t.labels[a] = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (int k = 0; k < n; ++k) t.mul[a][id(j, k)] = id(i, k);
    }
  return must_validate(t, "pair_groupoid");
}

FiniteGroupoid cyclic_group(int n) {
  return build_group(
      n, "g", [](Arrow i, Arrow j, int m) { return (i + j) % m; },
      [](Arrow i, int m) { return (m - i) % m; });
}

FiniteGroupoid klein_four_group() {
  static const std::vector<std::string> names = {"e", "a", "b", "c"};
  return build_group(
      4, "", [](Arrow i, Arrow j, int) { return i ^ j; }, [](Arrow i, int) { return i; },
      &names);
}

FiniteGroupoid trivial_group() { return cyclic_group(1); }

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const int na = a.size();
  const int n = na + b.size();
  GroupoidTables t;
  t.unit.resize(n);
  t.range.resize(n);
  t.source.resize(n);
  t.inverse.resize(n);
  t.mul.assign(n, std::vector<Arrow>(n, kUndefined));
  t.labels.resize(n);
  for (int i = 0; i < na; ++i) {
    t.unit[i] = a.is_unit(i);
    t.range[i] = a.range(i);
    t.source[i] = a.source(i);
    t.inverse[i] = a.inverse(i);
    t.labels[i] = "L" + a.label(i);
    for (int j = 0; j < na; ++j)
      if (a.mul(i, j) != kUndefined) t.mul[i][j] = a.mul(i, j);
  }
  for (int i = 0; i < b.size(); ++i) {
    t.unit[na + i] = b.is_unit(i);
    t.range[na + i] = na + b.range(i);
    t.source[na + i] = na + b.source(i);
    t.inverse[na + i] = na + b.inverse(i);
    t.labels[na + i] = "R" + b.label(i);
    for (int j = 0; j < b.size(); ++j)
      if (b.mul(i, j) != kUndefined) t.mul[na + i][na + j] = na + b.mul(i, j);
  }
  return must_validate(t, "disjoint_union");
}

}  // namespace gpd
