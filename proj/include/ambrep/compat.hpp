#pragma once

#include "ambrep/dual.hpp"
#include "ambrep/order.hpp"

namespace ambrep {

/// Boolean pairing P : S × S' → {0,1}. P(x,y) = 1 marks statements that
/// cannot hold together. Invariants (checked at construction):
///   (1) zero row and zero column vanish; P is ∧-distributive in each argument
///   (2) P is monotone in each argument (Scott continuity on finite carriers)
class Compatibility {
 public:
  Compatibility() = default;

  const SemilatticePtr& left() const noexcept { return left_; }
  const SemilatticePtr& right() const noexcept { return right_; }
  const BoolMatrix& table() const noexcept { return table_; }

  bool operator()(Index x, Index y) const { return table_.test(x, y); }
  /// xP = {y | P(x,y) = 1}
  const ElementSet& row(Index x) const { return table_.row(x); }
  /// Py = {x | P(x,y) = 1}
  ElementSet column(Index y) const { return table_.column(y); }

  bool operator==(const Compatibility& other) const {
    return table_ == other.table_ && same_semilattice(left_, other.left_) &&
           same_semilattice(right_, other.right_);
  }

 private:
  friend Compatibility check_compatibility(BoolMatrix, SemilatticePtr, SemilatticePtr);
  SemilatticePtr left_;
  SemilatticePtr right_;
  BoolMatrix table_;
};

/// Throws AxiomViolated; clause is "(1)" or "(2)", witness is (x, y) for the
/// zero clause and (x1, x2, y) / (x, y1, y2) for the distributivity clause.
Compatibility check_compatibility(BoolMatrix table, SemilatticePtr left, SemilatticePtr right);

/// Rows pairwise distinct and columns pairwise distinct. On failure the
/// witness is the colliding pair; detail says "rows" or "columns".
Verdict check_separating(const Compatibility& p);

/// P(x, F) = [x ∈ F] between S and its Lawson dual.
Compatibility canonical_pairing(const SemilatticePtr& s);

/// The transposed compatibility S' × S.
Compatibility reverse(const Compatibility& p);

/// x ↦ xP as a morphism S → S'^∧ (an isomorphism when P separates).
struct PolarIso {
  DualSemilattice dual;  ///< dual of the right-hand semilattice
  SemilatticeMorphism iso;
};

/// Throws NotSeparating.
PolarIso compat_to_iso(const Compatibility& p);
/// Inverse of compat_to_iso: P(x, y) = [y ∈ i(x)]. Throws NotIso.
Compatibility iso_to_compat(const SemilatticeMorphism& iso, const DualSemilattice& dual);

enum class Side { Left, Right };

/// A^⊥ for A on the given side: all elements on the other side with
/// P = 0 against every member of A.
ElementSet transversal(const Compatibility& p, const ElementSet& a, Side side);

}  // namespace ambrep
