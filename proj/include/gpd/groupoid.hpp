#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd {

using Arrow = int;
inline constexpr Arrow kUndefined = -1;

// One failed axiom with the arrows that witness the failure.
struct Violation {
  std::string axiom;
  std::string witness;
};

template <class T>
struct Validated {
  std::optional<T> value;
  std::vector<Violation> violations;

  bool ok() const { return value.has_value() && violations.empty(); }
  const T& operator*() const { return *value; }
  T& operator*() { return *value; }
  const T* operator->() const { return &*value; }
  T* operator->() { return &*value; }
};

std::string violations_to_string(const std::vector<Violation>& vs);

// Raw candidate tables for a finite groupoid. Composability is stored
// explicitly: mul[g][h] == kUndefined outside the declared domain.
struct GroupoidTables {
  std::vector<bool> unit;
  std::vector<Arrow> range;
  std::vector<Arrow> source;
  std::vector<Arrow> inverse;
  std::vector<std::vector<Arrow>> mul;
  std::vector<std::string> labels;  // optional; defaulted when empty

  int size() const { return static_cast<int>(range.size()); }
};

// A validated finite groupoid. Arrows are dense indices 0..size()-1; units
// are a flagged subset. Immutable after construction.
class FiniteGroupoid {
 public:
  int size() const { return tables_.size(); }
  bool is_unit(Arrow g) const { return tables_.unit[g]; }
  Arrow range(Arrow g) const { return tables_.range[g]; }
  Arrow source(Arrow g) const { return tables_.source[g]; }
  Arrow inverse(Arrow g) const { return tables_.inverse[g]; }
  Arrow mul(Arrow g, Arrow h) const { return tables_.mul[g][h]; }
  bool composable(Arrow g, Arrow h) const { return tables_.source[g] == tables_.range[h]; }

  const std::vector<Arrow>& units() const { return units_; }
  int unit_count() const { return static_cast<int>(units_.size()); }
  // Position of a unit arrow within units(), for per-unit tables.
  int unit_pos(Arrow u) const { return unit_pos_[u]; }
  // Arrows with range u, for each unit position.
  const std::vector<Arrow>& range_fiber(int upos) const { return range_fibers_[upos]; }

  const std::string& label(Arrow g) const { return tables_.labels[g]; }
  const GroupoidTables& tables() const { return tables_; }

  friend Validated<FiniteGroupoid> validate_groupoid(const GroupoidTables& candidate);

 private:
  GroupoidTables tables_;
  std::vector<Arrow> units_;
  std::vector<int> unit_pos_;
  std::vector<std::vector<Arrow>> range_fibers_;
};

// Checks every groupoid axiom exhaustively and returns the groupoid only if
// all of them hold; otherwise the violation list names each failed axiom
// with witnesses. Throws std::invalid_argument on index-inconsistent tables.
Validated<FiniteGroupoid> validate_groupoid(const GroupoidTables& candidate);

// validate_groupoid that throws std::logic_error on failure; for outputs of
// constructions that are theorems ("constructions never trusted").
FiniteGroupoid must_validate(const GroupoidTables& tables, const std::string& context);

// Haar system on a finite groupoid: a positive weight per arrow, left
// invariant, hence of the canonical form weight(h) = w(s(h)).
struct HaarSystem {
  std::vector<Rational> weight;       // per arrow
  std::vector<Rational> unit_weight;  // per unit position

  const Rational& w(const FiniteGroupoid& g, Arrow h) const { return weight[h]; }
};

// Verifies positivity and left invariance pointwise; derives the per-unit
// form. The violation witness names the composable pair (g,m) that breaks
// weight(g m) = weight(m).
Validated<HaarSystem> canonical_haar(const FiniteGroupoid& g, std::vector<Rational> weights);

HaarSystem counting_haar(const FiniteGroupoid& g);

// Left action of a groupoid on a finite set with moment map. Pure index
// data; the acting groupoid is passed alongside wherever it is needed.
struct SpaceAction {
  int points = 0;
  std::vector<Arrow> moment;            // point -> unit arrow of actor
  std::vector<int> table;               // (x * points + t) -> point, or kUndefined
  std::vector<std::string> point_labels;

  bool defined(const FiniteGroupoid& g, Arrow x, int t) const {
    return moment[t] == g.source(x);
  }
  int apply(Arrow x, int t) const { return table[static_cast<size_t>(x) * points + t]; }
};

Validated<SpaceAction> validate_space_action(const FiniteGroupoid& g, SpaceAction candidate);

// Action groupoid G \ltimes T: arrows are pairs (x,t) with s(x) = rho(t),
// ordered lexicographically by (actor index, point index).
struct ActionGroupoid {
  FiniteGroupoid groupoid;
  std::vector<std::pair<Arrow, int>> pairs;  // arrow -> (x, t)
  std::vector<Arrow> pair_index;             // x * points + t -> arrow, or kUndefined
  int points = 0;

  Arrow arrow_of(Arrow x, int t) const {
    return pair_index[static_cast<size_t>(x) * points + t];
  }
};

ActionGroupoid action_groupoid(const FiniteGroupoid& g, const SpaceAction& action);

// The action groupoid H for the right translation action of G on itself,
// with elements (x,y,xy) encoded as pairs (x,y), together with the left
// G-action w.(x,y,xy) = (wx,y,wxy) on the arrow set of H.
struct RightTranslation {
  FiniteGroupoid h;
  std::vector<std::pair<Arrow, Arrow>> triples;  // H-arrow -> (x, y)
  std::vector<Arrow> triple_index;               // x * |G| + y -> H-arrow, or kUndefined
  std::vector<Arrow> moment;                     // H-arrow -> unit of G: r(x)
  std::vector<std::vector<Arrow>> act;           // act[w][H-arrow] -> H-arrow, or kUndefined

  Arrow arrow_of(Arrow x, Arrow y, int gsize) const {
    return triple_index[static_cast<size_t>(x) * gsize + y];
  }
};

RightTranslation right_translation_groupoid(const FiniteGroupoid& g);

// Restriction of a groupoid to a subset of arrows closed under all
// operations, with index maps in both directions.
struct SubGroupoid {
  FiniteGroupoid groupoid;
  std::vector<Arrow> to_parent;
  std::vector<Arrow> from_parent;  // kUndefined off the subset
};

SubGroupoid restrict_groupoid(const FiniteGroupoid& g, const std::vector<Arrow>& arrows,
                              const std::string& context);

// Small builders used by tests, templates and the scenario generator.
FiniteGroupoid pair_groupoid(int n);
FiniteGroupoid cyclic_group(int n);
FiniteGroupoid klein_four_group();
FiniteGroupoid trivial_group();
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

}  // namespace gpd
