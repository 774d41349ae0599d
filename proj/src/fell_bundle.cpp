#include "gpd/fell_bundle.hpp"

#include <stdexcept>

#include "gpd/numeric.hpp"
#include "gpd/sampling.hpp"
#include "gpd/semidirect.hpp"

namespace gpd {

QVec BilinearTensor::apply(const QVec& a, const QVec& b) const {
  QVec out(dim_out);
  for (int i = 0; i < dim_a; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_b; ++j) {
      if (b[j].is_zero()) continue;
      add_scaled(out, basis_product(i, j), a[i] * b[j]);
    }
  }
  return out;
}

QMatrix UnitFiberRealization::rep_of(const QVec& v) const {
  QMatrix out(space_dim, space_dim);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (size_t e = 0; e < out.a.size(); ++e) out.a[e] += v[i] * rep[i].a[e];
  }
  return out;
}

namespace {

QVec basis_vec(int dim, int i) {
  QVec v(dim);
  v[i] = GaussianRational(1);
  return v;
}

void check_bundle_shapes(const FiniteGroupoid& g, const FellBundle& b) {
  const int n = g.size();
  if (static_cast<int>(b.dim.size()) != n || static_cast<int>(b.invol.size()) != n)
    throw std::invalid_argument("fell bundle: table sizes do not match the base groupoid");
  for (Arrow h = 0; h < n; ++h) {
    if (b.dim[h] < 0) throw std::invalid_argument("fell bundle: negative fibre dimension");
    if (b.invol[h].rows != b.dim[g.inverse(h)] || b.invol[h].cols != b.dim[h])
      throw std::invalid_argument("fell bundle: involution shape mismatch at " + g.label(h));
  }
  for (Arrow h = 0; h < n; ++h)
    for (Arrow k = 0; k < n; ++k) {
      bool comp = g.composable(h, k);
      bool present = b.has_mult(h, k);
      if (comp && !present)
        throw std::invalid_argument("fell bundle: missing tensor on composable pair " +
                                    g.label(h) + "," + g.label(k));
      if (!comp && present)
        throw std::invalid_argument("fell bundle: tensor off the composable pairs " +
                                    g.label(h) + "," + g.label(k));
      if (!present) continue;
      const BilinearTensor& t = b.mult_at(h, k);
      if (t.dim_a != b.dim[h] || t.dim_b != b.dim[k] || t.dim_out != b.dim[g.mul(h, k)])
        throw std::invalid_argument("fell bundle: tensor shape mismatch at " + g.label(h) +
                                    "," + g.label(k));
    }
  if (static_cast<int>(b.unit_real.size()) != g.unit_count())
    throw std::invalid_argument("fell bundle: one unit realization per unit required");
  for (int p = 0; p < g.unit_count(); ++p) {
    const UnitFiberRealization& r = b.unit_real[p];
    Arrow u = g.units()[p];
    if (static_cast<int>(r.rep.size()) != b.dim[u])
      throw std::invalid_argument("fell bundle: realization arity mismatch at " + g.label(u));
    if (r.gram.rows != r.space_dim || r.gram.cols != r.space_dim)
      throw std::invalid_argument("fell bundle: gram shape mismatch at " + g.label(u));
    for (const QMatrix& m : r.rep)
      if (m.rows != r.space_dim || m.cols != r.space_dim)
        throw std::invalid_argument("fell bundle: rep shape mismatch at " + g.label(u));
  }
}

}  // namespace

BundleValidation validate_fell_bundle(const FiniteGroupoid& g, const FellBundle& b,
                                      const BundleCheckOptions& opts) {
  check_bundle_shapes(g, b);
  BundleValidation out;
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    out.violations.push_back({axiom, witness});
  };
  auto exact = [&](bool cond, const std::string& axiom, const std::string& witness) {
    ++out.exact_checks;
    if (!cond) fail(axiom, witness);
  };

  for (Arrow h = 0; h < g.size(); ++h)
    if (b.dim[h] == 0) out.warnings.push_back("zero-dimensional fibre at " + g.label(h));

  // Involutivity a** = a, as the exact matrix identity S_{h^{-1}} conj(S_h) = I.
  for (Arrow h = 0; h < g.size(); ++h) {
    QMatrix cs = b.invol[h];
    for (auto& e : cs.a) e = e.conj();
    exact(b.invol[g.inverse(h)] * cs == QMatrix::identity(b.dim[h]),
          "involution not involutive", g.label(h));
  }

  // FB3: (ab)* = b* a* on every composable pair and basis pair.
  for (const auto& [key, t] : b.mult) {
    Arrow h = static_cast<Arrow>(key >> 32);
    Arrow k = static_cast<Arrow>(key & 0xffffffffu);
    Arrow hk = g.mul(h, k);
    const BilinearTensor& rhs_t = b.mult_at(g.inverse(k), g.inverse(h));
    for (int i = 0; i < t.dim_a; ++i)
      for (int j = 0; j < t.dim_b; ++j) {
        QVec lhs = b.star(hk, densify(t.basis_product(i, j), t.dim_out));
        QVec rhs = rhs_t.apply(b.star(k, basis_vec(t.dim_b, j)), b.star(h, basis_vec(t.dim_a, i)));
        exact(lhs == rhs, "FB3 (ab)* ≠ b*a*",
              g.label(h) + "," + g.label(k) + " basis " + std::to_string(i) + "," +
                  std::to_string(j));
      }
  }

  // Associativity over every composable triple and basis triple.
  for (Arrow h = 0; h < g.size(); ++h)
    for (Arrow k = 0; k < g.size(); ++k) {
      if (!g.composable(h, k)) continue;
      Arrow hk = g.mul(h, k);
      for (Arrow m = 0; m < g.size(); ++m) {
        if (!g.composable(k, m)) continue;
        Arrow km = g.mul(k, m);
        const BilinearTensor& t_hk = b.mult_at(h, k);
        const BilinearTensor& t_km = b.mult_at(k, m);
        for (int i = 0; i < b.dim[h]; ++i)
          for (int j = 0; j < b.dim[k]; ++j) {
            QVec ab = densify(t_hk.basis_product(i, j), t_hk.dim_out);
            for (int l = 0; l < b.dim[m]; ++l) {
              QVec lhs = b.product(hk, m, ab, basis_vec(b.dim[m], l));
              QVec bc = densify(t_km.basis_product(j, l), t_km.dim_out);
              QVec rhs = b.product(h, km, basis_vec(b.dim[h], i), bc);
              exact(lhs == rhs, "multiplication not associative",
                    g.label(h) + "," + g.label(k) + "," + g.label(m));
            }
          }
      }
    }

  // FB4: each unit fibre is a C*-algebra, certified through its realization.
  for (int p = 0; p < g.unit_count(); ++p) {
    Arrow u = g.units()[p];
    const UnitFiberRealization& r = b.unit_real[p];
    if (r.space_dim > 0) {
      exact(r.gram.is_hermitian() && is_positive_definite(r.gram),
            "FB4 realization gram not positive definite", g.label(u));
    }
    if (!r.block_sizes.empty()) {
      int sum = 0;
      for (int s : r.block_sizes) sum += s;
      exact(sum == r.space_dim && r.gram == QMatrix::identity(r.space_dim),
            "FB4 block realization inconsistent", g.label(u));
    }
    const BilinearTensor& t = b.mult_at(u, u);
    for (int i = 0; i < b.dim[u]; ++i) {
      for (int j = 0; j < b.dim[u]; ++j) {
        QMatrix lhs = r.rep_of(densify(t.basis_product(i, j), t.dim_out));
        exact(lhs == r.rep[i] * r.rep[j], "FB4 realization not multiplicative",
              g.label(u) + " basis " + std::to_string(i) + "," + std::to_string(j));
      }
      QMatrix lhs = r.gram * r.rep_of(b.star(u, basis_vec(b.dim[u], i)));
      QMatrix rhs = r.rep[i].conj_transpose() * r.gram;
      exact(lhs == rhs, "FB4 realization not star-preserving",
            g.label(u) + " basis " + std::to_string(i));
    }
    // Faithfulness: the coefficient -> matrix map has full rank.
    if (b.dim[u] > 0) {
      QMatrix stacked(b.dim[u], r.space_dim * r.space_dim);
      for (int i = 0; i < b.dim[u]; ++i)
        for (size_t e = 0; e < r.rep[i].a.size(); ++e)
          stacked.at(i, static_cast<int>(e)) = r.rep[i].a[e];
      exact(rank(stacked) == b.dim[u], "FB4 realization not faithful", g.label(u));
    }
  }
  if (!out.violations.empty()) return out;  // FB5 leans on FB3/FB4 being sound

  // FB5 fullness: span{a b*} = A(r(h)) and span{a* b} = A(s(h)), by exact rank.
  for (Arrow h = 0; h < g.size(); ++h) {
    if (b.dim[h] == 0) continue;
    Arrow hi = g.inverse(h);
    RowEchelon left(b.dim[g.range(h)]);
    RowEchelon right(b.dim[g.source(h)]);
    for (int i = 0; i < b.dim[h]; ++i)
      for (int j = 0; j < b.dim[h]; ++j) {
        left.add_row(b.product(h, hi, basis_vec(b.dim[h], i), b.star(h, basis_vec(b.dim[h], j))));
        right.add_row(b.product(hi, h, b.star(h, basis_vec(b.dim[h], i)), basis_vec(b.dim[h], j)));
      }
    ++out.exact_checks;
    if (left.rank() != b.dim[g.range(h)])
      out.warnings.push_back("FB5: left inner products span a proper ideal at " + g.label(h));
    ++out.exact_checks;
    if (right.rank() != b.dim[g.source(h)])
      out.warnings.push_back("FB5: right inner products span a proper ideal at " + g.label(h));
  }

  // FB5 positivity of a* a in A(s(h)), spectral at the configured tolerance:
  // basis-enumerated samples plus seeded random fibre elements.
  auto check_positive = [&](Arrow h, const QVec& a) {
    Arrow u = g.source(h);
    const UnitFiberRealization& r = b.unit_real[g.unit_pos(u)];
    QVec asa = b.product(g.inverse(h), h, b.star(h, a), a);
    ++out.spectral_checks;
    double lo = min_eigenvalue_with_gram(to_complex(r.rep_of(asa)), r.gram);
    if (lo < -opts.positivity_tol)
      fail("FB5 a*a not positive (spectral)",
           g.label(h) + " min eigenvalue " + std::to_string(lo));
  };
  for (Arrow h = 0; h < g.size(); ++h) {
    for (int i = 0; i < b.dim[h]; ++i) {
      check_positive(h, basis_vec(b.dim[h], i));
      for (int j = i + 1; j < b.dim[h]; ++j) {
        QVec v = basis_vec(b.dim[h], i);
        v[j] = GaussianRational(1);
        check_positive(h, v);
        v[j] = GaussianRational::i();
        check_positive(h, v);
      }
    }
  }
  Rng rng(opts.seed);
  std::vector<Arrow> carriers;
  for (Arrow h = 0; h < g.size(); ++h)
    if (b.dim[h] > 0) carriers.push_back(h);
  if (!carriers.empty()) {
    for (int s = 0; s < opts.random_samples; ++s) {
      Arrow h = carriers[rng() % carriers.size()];
      QVec v(b.dim[h]);
      for (auto& c : v) c = random_gaussian(rng);
      check_positive(h, v);
    }
  }
  return out;
}

void must_validate_bundle(const FiniteGroupoid& g, const FellBundle& bundle,
                          const std::string& context, const BundleCheckOptions& opts) {
  BundleValidation v = validate_fell_bundle(g, bundle, opts);
  if (!v.ok())
    throw std::logic_error(context + ": constructed bundle fails validation: " +
                           violations_to_string(v.violations));
}

Validated<FellBundle> build_trivial_bundle(const FiniteGroupoid& g,
                                           const std::vector<int>& unit_dims) {
  if (static_cast<int>(unit_dims.size()) != g.unit_count())
    throw std::invalid_argument("build_trivial_bundle: one dimension per unit required");
  Validated<FellBundle> out;
  auto d_of = [&](Arrow u) { return unit_dims[g.unit_pos(u)]; };
  for (Arrow h = 0; h < g.size(); ++h)
    if (d_of(g.range(h)) != d_of(g.source(h)))
      out.violations.push_back({"dimension mismatch across an arrow", g.label(h)});
  if (!out.violations.empty()) return out;

  FellBundle b;
  b.dim.resize(g.size());
  for (Arrow h = 0; h < g.size(); ++h) {
    int d = d_of(g.range(h));
    b.dim[h] = d * d;
  }
  // Fibre basis: matrix units E_{pq} indexed p*d+q.
  for (Arrow h = 0; h < g.size(); ++h) {
    int d = d_of(g.range(h));
    QMatrix s(b.dim[h], b.dim[h]);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) s.at(q * d + p, p * d + q) = GaussianRational(1);
    b.invol[h];  // placeholder to keep sizes aligned (assigned below)
    if (static_cast<int>(b.invol.size()) <= h) b.invol.resize(g.size());
    b.invol[h] = std::move(s);
    for (Arrow k = 0; k < g.size(); ++k) {
      if (!g.composable(h, k)) continue;
      BilinearTensor t = BilinearTensor::zeros(b.dim[h], b.dim[k], b.dim[g.mul(h, k)]);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
          for (int r2 = 0; r2 < d; ++r2)
            t.basis_product(p * d + q, q * d + r2).emplace_back(p * d + r2,
                                                                GaussianRational(1));
      b.mult.emplace(pair_key(h, k), std::move(t));
    }
  }
  for (int p = 0; p < g.unit_count(); ++p) {
    int d = unit_dims[p];
    UnitFiberRealization r;
    r.block_sizes = {d};
    r.space_dim = d;
    r.gram = QMatrix::identity(d);
    for (int i = 0; i < d * d; ++i) {
      QMatrix m(d, d);
      m.at(i / d, i % d) = GaussianRational(1);
      r.rep.push_back(std::move(m));
    }
    b.unit_real.push_back(std::move(r));
  }
  must_validate_bundle(g, b, "build_trivial_bundle");
  out.value = std::move(b);
  return out;
}

Cocycle trivial_cocycle(const FiniteGroupoid& g) {
  Cocycle c;
  for (Arrow h = 0; h < g.size(); ++h)
    for (Arrow k = 0; k < g.size(); ++k)
      if (g.composable(h, k)) c.emplace(pair_key(h, k), GaussianRational(1));
  return c;
}

Cocycle cocycle_from_coboundary(const FiniteGroupoid& g,
                                const std::vector<GaussianRational>& beta) {
  if (static_cast<int>(beta.size()) != g.size())
    throw std::invalid_argument("cocycle_from_coboundary: one value per arrow required");
  for (Arrow h = 0; h < g.size(); ++h) {
    if (beta[h].norm2() != 1)
      throw std::invalid_argument("cocycle_from_coboundary: beta must be unit modulus");
    if (g.is_unit(h) && beta[h] != GaussianRational(1))
      throw std::invalid_argument("cocycle_from_coboundary: beta must be 1 on units");
  }
  Cocycle c;
  for (Arrow h = 0; h < g.size(); ++h)
    for (Arrow k = 0; k < g.size(); ++k)
      if (g.composable(h, k))
        c.emplace(pair_key(h, k), beta[h] * beta[k] * beta[g.mul(h, k)].conj());
  return c;
}

Validated<FellBundle> build_line_bundle(const FiniteGroupoid& g, const Cocycle& sigma) {
  Validated<FellBundle> out;
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    out.violations.push_back({axiom, witness});
  };
  auto sig = [&](Arrow h, Arrow k) -> const GaussianRational* {
    auto it = sigma.find(pair_key(h, k));
    return it == sigma.end() ? nullptr : &it->second;
  };
  for (Arrow h = 0; h < g.size(); ++h)
    for (Arrow k = 0; k < g.size(); ++k) {
      if (!g.composable(h, k)) {
        if (sig(h, k)) fail("cocycle defined off the composable pairs", g.label(h) + "," + g.label(k));
        continue;
      }
      const GaussianRational* s = sig(h, k);
      if (!s) {
        fail("cocycle missing on composable pair", g.label(h) + "," + g.label(k));
        continue;
      }
      if (s->norm2() != 1) fail("cocycle value not unit modulus", g.label(h) + "," + g.label(k));
    }
  if (!out.violations.empty()) return out;
  for (Arrow h = 0; h < g.size(); ++h) {
    if (*sig(g.range(h), h) != GaussianRational(1) || *sig(h, g.source(h)) != GaussianRational(1))
      fail("cocycle not normalized on units", g.label(h));
  }
  for (Arrow h = 0; h < g.size(); ++h)
    for (Arrow k = 0; k < g.size(); ++k) {
      if (!g.composable(h, k)) continue;
      for (Arrow m = 0; m < g.size(); ++m) {
        if (!g.composable(k, m)) continue;
        // sigma(h,k) sigma(hk,m) = sigma(k,m) sigma(h,km)
        if (*sig(h, k) * *sig(g.mul(h, k), m) != *sig(k, m) * *sig(h, g.mul(k, m)))
          fail("cocycle identity fails", g.label(h) + "," + g.label(k) + "," + g.label(m));
      }
    }
  if (!out.violations.empty()) return out;

  FellBundle b;
  b.dim.assign(g.size(), 1);
  b.invol.resize(g.size());
  for (Arrow h = 0; h < g.size(); ++h) {
    QMatrix s(1, 1);
    s.at(0, 0) = sig(h, g.inverse(h))->conj();
    b.invol[h] = std::move(s);
    for (Arrow k = 0; k < g.size(); ++k) {
      if (!g.composable(h, k)) continue;
      BilinearTensor t = BilinearTensor::zeros(1, 1, 1);
      t.basis_product(0, 0).emplace_back(0, *sig(h, k));
      b.mult.emplace(pair_key(h, k), std::move(t));
    }
  }
  for (int p = 0; p < g.unit_count(); ++p) {
    UnitFiberRealization r;
    r.block_sizes = {1};
    r.space_dim = 1;
    r.gram = QMatrix::identity(1);
    r.rep.push_back(QMatrix::identity(1));
    b.unit_real.push_back(std::move(r));
  }
  must_validate_bundle(g, b, "build_line_bundle");
  out.value = std::move(b);
  return out;
}

Validated<FellBundle> pullback_bundle(const FiniteGroupoid& h, const FiniteGroupoid& g,
                                      const std::vector<Arrow>& phi, const FellBundle& a) {
  if (static_cast<int>(phi.size()) != h.size())
    throw std::invalid_argument("pullback_bundle: phi must be defined on every arrow");
  Validated<FellBundle> out;
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    out.violations.push_back({axiom, witness});
  };
  for (Arrow x : phi)
    if (x < 0 || x >= g.size()) throw std::invalid_argument("pullback_bundle: phi out of range");
  for (Arrow p = 0; p < h.size(); ++p)
    for (Arrow q = 0; q < h.size(); ++q) {
      if (!h.composable(p, q)) continue;
      if (!g.composable(phi[p], phi[q])) {
        fail("phi does not preserve composability", h.label(p) + "," + h.label(q));
        continue;
      }
      if (phi[h.mul(p, q)] != g.mul(phi[p], phi[q]))
        fail("phi not multiplicative", h.label(p) + "," + h.label(q));
    }
  if (!out.violations.empty()) return out;
  for (Arrow p = 0; p < h.size(); ++p) {
    if (h.is_unit(p) && !g.is_unit(phi[p])) fail("phi maps a unit off the units", h.label(p));
    if (phi[h.inverse(p)] != g.inverse(phi[p])) fail("phi does not preserve inverses", h.label(p));
  }
  if (!out.violations.empty()) return out;

  FellBundle b;
  b.dim.resize(h.size());
  b.invol.resize(h.size());
  for (Arrow p = 0; p < h.size(); ++p) {
    b.dim[p] = a.dim[phi[p]];
    b.invol[p] = a.invol[phi[p]];
    for (Arrow q = 0; q < h.size(); ++q)
      if (h.composable(p, q)) b.mult.emplace(pair_key(p, q), a.mult_at(phi[p], phi[q]));
  }
  for (Arrow v : h.units()) b.unit_real.push_back(a.unit_real[g.unit_pos(phi[v])]);
  must_validate_bundle(h, b, "pullback_bundle");
  out.value = std::move(b);
  return out;
}

BundleAction identity_bundle_action(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                    const GroupoidAction& action, const FellBundle& bundle) {
  BundleAction ba;
  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow t = 0; t < h.size(); ++t)
      if (action.defined(g, x, t))
        ba.fiber.emplace(pair_key(x, t), QMatrix::identity(bundle.dim[t]));
  return ba;
}

Validated<BundleAction> validate_bundle_action(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                               const GroupoidAction& action,
                                               const FellBundle& bundle, BundleAction candidate,
                                               double isometry_tol) {
  Validated<BundleAction> out;
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    out.violations.push_back({axiom, witness});
  };
  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow t = 0; t < h.size(); ++t) {
      bool should = action.defined(g, x, t);
      bool present = candidate.has(x, t);
      if (should && !present) {
        fail("fiber map missing on the action domain", g.label(x) + "," + h.label(t));
        continue;
      }
      if (!should && present) {
        fail("fiber map off the action domain", g.label(x) + "," + h.label(t));
        continue;
      }
      if (!present) continue;
      const QMatrix& m = candidate.map_at(x, t);
      Arrow xt = action.apply(x, t);
      if (m.rows != bundle.dim[xt] || m.cols != bundle.dim[t]) {
        fail("fiber map shape mismatch", g.label(x) + "," + h.label(t));
        continue;
      }
      if (m.rows != m.cols || rank(m) != m.cols)
        fail("fiber map not a linear bijection", g.label(x) + "," + h.label(t));
    }
  if (!out.violations.empty()) return out;

  // rho(a)·a = a on fibres: units act as the identity.
  for (Arrow t = 0; t < h.size(); ++t) {
    const QMatrix& m = candidate.map_at(action.moment[t], t);
    if (!(m == QMatrix::identity(bundle.dim[t])))
      fail("unit fiber map is not the identity", h.label(t));
  }
  // Cocycle identity (xy)·a = x·(y·a).
  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow y = 0; y < g.size(); ++y) {
      if (g.mul(x, y) == kUndefined) continue;
      for (Arrow t = 0; t < h.size(); ++t) {
        if (!action.defined(g, y, t)) continue;
        QMatrix lhs = candidate.map_at(g.mul(x, y), t);
        QMatrix rhs = candidate.map_at(x, action.apply(y, t)) * candidate.map_at(y, t);
        if (!(lhs == rhs))
          fail("fiber cocycle identity fails", g.label(x) + "," + g.label(y) + "," + h.label(t));
      }
    }
  // Multiplicativity x·(ab) = (x·a)(x·b) over all composable fibre pairs.
  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow p = 0; p < h.size(); ++p) {
      if (!action.defined(g, x, p)) continue;
      for (Arrow q = 0; q < h.size(); ++q) {
        if (!h.composable(p, q) || !action.defined(g, x, q)) continue;
        Arrow pq = h.mul(p, q);
        const BilinearTensor& t_src = bundle.mult_at(p, q);
        const QMatrix& fp = candidate.map_at(x, p);
        const QMatrix& fq = candidate.map_at(x, q);
        const QMatrix& fpq = candidate.map_at(x, pq);
        for (int i = 0; i < bundle.dim[p]; ++i)
          for (int j = 0; j < bundle.dim[q]; ++j) {
            QVec lhs = fpq.apply(densify(t_src.basis_product(i, j), t_src.dim_out));
            QVec rhs = bundle.product(action.apply(x, p), action.apply(x, q),
                                      fp.apply(basis_vec(bundle.dim[p], i)),
                                      fq.apply(basis_vec(bundle.dim[q], j)));
            if (!(lhs == rhs)) {
              fail("bundle action not multiplicative",
                   g.label(x) + "," + h.label(p) + "," + h.label(q));
              j = bundle.dim[q];
              i = bundle.dim[p];
            }
          }
      }
    }
  // Star preservation x·(a*) = (x·a)* as the exact matrix identity
  // F_{x,h^{-1}} S_h = S_{x·h} conj(F_{x,h}).
  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow p = 0; p < h.size(); ++p) {
      if (!action.defined(g, x, p)) continue;
      QMatrix lhs = candidate.map_at(x, h.inverse(p)) * bundle.invol[p];
      QMatrix conj_f = candidate.map_at(x, p);
      for (auto& e : conj_f.a) e = e.conj();
      QMatrix rhs = bundle.invol[action.apply(x, p)] * conj_f;
      if (!(lhs == rhs)) fail("bundle action not star-preserving", g.label(x) + "," + h.label(p));
    }
  if (!out.violations.empty()) return out;

  // Isometry in the realized norm (isomorphisms are isometric).
  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow p = 0; p < h.size(); ++p) {
      if (!action.defined(g, x, p)) continue;
      for (int i = 0; i < bundle.dim[p]; ++i) {
        QVec a = basis_vec(bundle.dim[p], i);
        double na = fiber_norm(h, bundle, p, a);
        double nfa = fiber_norm(h, bundle, action.apply(x, p),
                                candidate.map_at(x, p).apply(a));
        if (std::abs(na - nfa) > isometry_tol)
          fail("bundle action not isometric in the realized norm",
               g.label(x) + "," + h.label(p) + " basis " + std::to_string(i));
      }
    }

  if (out.violations.empty()) out.value = std::move(candidate);
  return out;
}

FellBundle semidirect_bundle(const FiniteGroupoid& g, const FiniteGroupoid& h,
                             const GroupoidAction& action, const FellBundle& a,
                             const BundleAction& ba, const SemidirectGroupoid& sd) {
  const FiniteGroupoid& s = sd.groupoid;
  FellBundle b;
  b.dim.resize(s.size());
  b.invol.resize(s.size());
  for (Arrow p = 0; p < s.size(); ++p) b.dim[p] = a.dim[sd.pairs[p].first];
  for (Arrow p = 0; p < s.size(); ++p) {
    auto [ha, x] = sd.pairs[p];
    // (a,x)* = (x^{-1}·a*, x^{-1}).
    b.invol[p] = ba.map_at(g.inverse(x), h.inverse(ha)) * a.invol[ha];
    for (Arrow q = 0; q < s.size(); ++q) {
      if (!s.composable(p, q)) continue;
      auto [kb, y] = sd.pairs[q];
      Arrow xk = action.apply(x, kb);
      const QMatrix& f = ba.map_at(x, kb);
      const BilinearTensor& t_a = a.mult_at(ha, xk);
      BilinearTensor t = BilinearTensor::zeros(b.dim[p], b.dim[q], b.dim[s.mul(p, q)]);
      for (int i = 0; i < t.dim_a; ++i)
        for (int j = 0; j < t.dim_b; ++j)
          t.basis_product(i, j) =
              sparsify(t_a.apply(basis_vec(t.dim_a, i), f.apply(basis_vec(t.dim_b, j))));
      b.mult.emplace(pair_key(p, q), std::move(t));
    }
  }
  for (Arrow su : s.units()) {
    Arrow v = sd.pairs[su].first;  // unit (v, rho(v)) identified with v
    b.unit_real.push_back(a.unit_real[h.unit_pos(v)]);
  }
  must_validate_bundle(s, b, "semidirect_bundle");
  return b;
}

FellBundle restrict_bundle(const FiniteGroupoid& h, const FellBundle& a, const SubGroupoid& sub) {
  const FiniteGroupoid& s = sub.groupoid;
  FellBundle b;
  b.dim.resize(s.size());
  b.invol.resize(s.size());
  for (Arrow p = 0; p < s.size(); ++p) {
    b.dim[p] = a.dim[sub.to_parent[p]];
    b.invol[p] = a.invol[sub.to_parent[p]];
    for (Arrow q = 0; q < s.size(); ++q)
      if (s.composable(p, q))
        b.mult.emplace(pair_key(p, q), a.mult_at(sub.to_parent[p], sub.to_parent[q]));
  }
  for (Arrow v : s.units()) b.unit_real.push_back(a.unit_real[h.unit_pos(sub.to_parent[v])]);
  return b;
}

double fiber_norm(const FiniteGroupoid& g, const FellBundle& bundle, Arrow h, const QVec& a) {
  Arrow u = g.source(h);
  const UnitFiberRealization& r = bundle.unit_real[g.unit_pos(u)];
  QVec asa = bundle.product(g.inverse(h), h, bundle.star(h, a), a);
  double n2 = operator_norm_with_gram(to_complex(r.rep_of(asa)), r.gram);
  return n2 <= 0 ? 0.0 : std::sqrt(n2);
}

}  // namespace gpd
