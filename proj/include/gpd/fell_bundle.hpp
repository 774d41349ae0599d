#pragma once

#include <cstdint>
#include <unordered_map>

#include "gpd/action.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/qlinalg.hpp"

namespace gpd {

inline uint64_t pair_key(int a, int b) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}

// Bilinear structure tensor A(h) ⊗ A(k) -> A(hk), stored sparsely per basis
// pair.
struct BilinearTensor {
  int dim_a = 0;
  int dim_b = 0;
  int dim_out = 0;
  std::vector<SparseVec> table;  // (i * dim_b + j) -> coefficients in A(hk)

  static BilinearTensor zeros(int da, int db, int dout) {
    BilinearTensor t;
    t.dim_a = da;
    t.dim_b = db;
    t.dim_out = dout;
    t.table.resize(static_cast<size_t>(da) * db);
    return t;
  }
  const SparseVec& basis_product(int i, int j) const {
    return table[static_cast<size_t>(i) * dim_b + j];
  }
  SparseVec& basis_product(int i, int j) { return table[static_cast<size_t>(i) * dim_b + j]; }
  QVec apply(const QVec& a, const QVec& b) const;
};

// Faithful *-representation of a unit fibre on an inner-product space
// (C^space_dim, gram). Bundles built from matrix data use the canonical
// block form: gram = identity, rep matrices block diagonal with the sizes in
// block_sizes. Crossed-product fibres carry the weighted regular
// representation instead, whose gram is a nontrivial positive definite
// matrix; both shapes satisfy the same exact axioms.
struct UnitFiberRealization {
  std::vector<int> block_sizes;
  int space_dim = 0;
  std::vector<QMatrix> rep;  // one per fibre basis vector
  QMatrix gram;

  QMatrix rep_of(const QVec& v) const;
};

// Fell bundle over a finite groupoid: fibre dimensions, multiplication
// tensors on composable pairs, antilinear involutions A(h) -> A(h^{-1}), and
// realizations of the unit fibres. star(v) is invol[h] * conj(v).
struct FellBundle {
  std::vector<int> dim;
  std::unordered_map<uint64_t, BilinearTensor> mult;
  std::vector<QMatrix> invol;
  std::vector<UnitFiberRealization> unit_real;  // per unit position

  const BilinearTensor& mult_at(Arrow h, Arrow k) const { return mult.at(pair_key(h, k)); }
  bool has_mult(Arrow h, Arrow k) const { return mult.contains(pair_key(h, k)); }
  QVec star(Arrow h, const QVec& v) const { return invol[h].apply_antilinear(v); }
  // a ∈ A(h), b ∈ A(k) -> ab ∈ A(hk).
  QVec product(Arrow h, Arrow k, const QVec& a, const QVec& b) const {
    return mult_at(h, k).apply(a, b);
  }
};

struct BundleValidation {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;  // e.g. fullness failures on degenerate fibres
  long long exact_checks = 0;
  long long spectral_checks = 0;

  bool ok() const { return violations.empty(); }
};

struct BundleCheckOptions {
  double positivity_tol = 1e-9;
  int random_samples = 100;
  uint64_t seed = 2024;
};

// Exhaustive FB1-FB5 verification: associativity, involutivity and FB3 are
// exact over every composable tuple and basis index; FB4 is exact through
// the unit realizations; FB5 fullness is an exact rank computation and FB5
// positivity is spectral at positivity_tol on enumerated plus seeded random
// fibre elements.
BundleValidation validate_fell_bundle(const FiniteGroupoid& g, const FellBundle& bundle,
                                      const BundleCheckOptions& opts = {});

// Throwing wrapper for constructions whose validity is a theorem.
void must_validate_bundle(const FiniteGroupoid& g, const FellBundle& bundle,
                          const std::string& context, const BundleCheckOptions& opts = {});

// Matrix bundle: A(h) = d x d matrices with d = d(r(h)) = d(s(h)), matrix
// multiplication and conjugate-transpose involution. unit_dims is indexed by
// unit position; the dimension must be constant across every arrow.
Validated<FellBundle> build_trivial_bundle(const FiniteGroupoid& g,
                                           const std::vector<int>& unit_dims);

// Line bundle twisted by a normalized unit-modulus 2-cocycle sigma on the
// composable pairs: all fibres are one-dimensional, e_h e_k = sigma(h,k)
// e_{hk} and e_h^* = conj(sigma(h,h^{-1})) e_{h^{-1}}.
using Cocycle = std::unordered_map<uint64_t, GaussianRational>;

Validated<FellBundle> build_line_bundle(const FiniteGroupoid& g, const Cocycle& sigma);

// sigma(h,k) = beta(h) beta(k) / beta(hk) for unit-modulus beta with
// beta = 1 on units; always a normalized cocycle.
Cocycle cocycle_from_coboundary(const FiniteGroupoid& g, const std::vector<GaussianRational>& beta);
Cocycle trivial_cocycle(const FiniteGroupoid& g);

// Pull-back of a bundle over G along a groupoid homomorphism phi: H -> G
// given arrowwise. Violations report where phi fails to be a homomorphism.
Validated<FellBundle> pullback_bundle(const FiniteGroupoid& h, const FiniteGroupoid& g,
                                      const std::vector<Arrow>& phi, const FellBundle& a);

// Action of G on a Fell bundle over H by isomorphisms, covering a groupoid
// action: a linear bijection A(h) -> A(x·h) for every (x,h) with
// s(x) = rho(h), multiplicative, star-preserving, and compatible with
// composition in G.
struct BundleAction {
  std::unordered_map<uint64_t, QMatrix> fiber;  // key (x,h)

  const QMatrix& map_at(Arrow x, Arrow h) const { return fiber.at(pair_key(x, h)); }
  bool has(Arrow x, Arrow h) const { return fiber.contains(pair_key(x, h)); }
};

// The identity lift: every fiber map is the identity matrix. Valid whenever
// the bundle data is itself G-invariant (dims, tensors and involutions match
// along the action), which validate_bundle_action checks.
BundleAction identity_bundle_action(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                    const GroupoidAction& action, const FellBundle& bundle);

Validated<BundleAction> validate_bundle_action(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                               const GroupoidAction& action,
                                               const FellBundle& bundle, BundleAction candidate,
                                               double isometry_tol = 1e-9);

// The semidirect-product Fell bundle over H x| G: the fibre over (h,x) is
// A(h), with (a,x)(b,y) = (a (x·b), xy) and (a,x)^* = (x^{-1}·a^*, x^{-1}).
// Output is re-validated, which re-proves the bundle lemma on the instance.
struct SemidirectGroupoid;  // from gpd/semidirect.hpp

FellBundle semidirect_bundle(const FiniteGroupoid& g, const FiniteGroupoid& h,
                             const GroupoidAction& action, const FellBundle& a,
                             const BundleAction& ba, const SemidirectGroupoid& sd);

// Restriction of a bundle to a subgroupoid (index maps from restrict_groupoid).
FellBundle restrict_bundle(const FiniteGroupoid& h, const FellBundle& a, const SubGroupoid& sub);

// ||a|| for a ∈ A(h): sqrt of the norm of a^* a in the realized unit fibre
// A(s(h)). Numeric (used by isometry checks and tests).
double fiber_norm(const FiniteGroupoid& g, const FellBundle& bundle, Arrow h, const QVec& a);

}  // namespace gpd
