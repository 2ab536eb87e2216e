#pragma once

#include "ambrep/compat.hpp"
#include "ambrep/dual.hpp"
#include "ambrep/order.hpp"

namespace ambrep {

/// Crisp ambiguous representation R ⊆ S1 × S2: every row xR is non-empty
/// and lower, every column Ry is upper. In particular (x, 0₂) ∈ R for all x.
class CrispRep {
 public:
  CrispRep() = default;

  const SemilatticePtr& source() const noexcept { return source_; }
  const SemilatticePtr& target() const noexcept { return target_; }
  const BoolMatrix& table() const noexcept { return table_; }

  bool contains(Index x, Index y) const { return table_.test(x, y); }
  /// xR
  const ElementSet& row(Index x) const { return table_.row(x); }
  /// Ry
  ElementSet column(Index y) const { return table_.column(y); }

  bool operator==(const CrispRep& other) const {
    return table_ == other.table_ && same_semilattice(source_, other.source_) &&
           same_semilattice(target_, other.target_);
  }

 private:
  friend CrispRep check_rep(BoolMatrix, SemilatticePtr, SemilatticePtr);
  SemilatticePtr source_;
  SemilatticePtr target_;
  BoolMatrix table_;
};

/// Validates the clauses "row-nonempty", "row-lower", "column-upper".
/// Throws RepViolated with the clause and witness (x, y).
CrispRep check_rep(BoolMatrix table, SemilatticePtr source, SemilatticePtr target);

/// Least representation containing the given pairs (rows closed downward,
/// columns upward, (x, 0₂) added).
CrispRep complete_rep(const BoolMatrix& seeds, const SemilatticePtr& source,
                      const SemilatticePtr& target);

/// Inclusion of representations on the same carriers.
bool is_subrep(const CrispRep& a, const CrispRep& b);

CrispRep full_rep(const SemilatticePtr& source, const SemilatticePtr& target);

/// E_S = {(x, y) | y ≤ x}.
CrispRep identity_rep(const SemilatticePtr& s);

/// I f = {(x, y) | y ≤ f(x)}.
CrispRep embed_morphism(const SemilatticeMorphism& f);

/// f(x) = max(xR) when every row has a greatest element and the result is a
/// morphism. Throws NotFunctional.
SemilatticeMorphism rep_to_morphism(const CrispRep& r);

/// R;Q. On finite carriers the relational product is already lower in each
/// row, so the closure step is the identity; computed with the parallel
/// kernel. Throws MiddleMismatch.
CrispRep compose(const CrispRep& r, const CrispRep& q);

/// R;Q evaluated from the closure definition: (x, z) is in iff for every
/// z' ≪ z some y has (x, y) ∈ R and (y, z') ∈ Q.
CrispRep compose_closure(const CrispRep& r, const CrispRep& q);

/// Pseudo-inverse over the canonical pairings, as a representation
/// S2^∧ ⇒ S1^∧. Production path: transposition with the zero row and column
/// fixed (↑t R^♯ ↑s ⟺ s R t; (ŷ, ∅) always; (∅, x̂) only for x̂ = ∅).
CrispRep pseudo_inverse(const CrispRep& r);

/// Pseudo-inverse for arbitrary separating compatibilities P1 : S1 × Ŝ1 and
/// P2 : S2 × Ŝ2, via ŷR^♯ = {x | ŷ ∈ (xR)^⊥}^⊥. The result is a
/// representation Ŝ2 ⇒ Ŝ1. Throws NotSeparating.
CrispRep pseudo_inverse(const CrispRep& r, const Compatibility& p1, const Compatibility& p2);

/// Re-expresses a representation Ŝ2 ⇒ Ŝ1 (as produced above) over the
/// canonical duals S2^∧ ⇒ S1^∧, identifying ŷ with the filter P2ŷ.
CrispRep to_canonical_duals(const CrispRep& native, const Compatibility& p1,
                            const Compatibility& p2);

/// R^♯♯ over the canonical pairings; lands back on S1 ⇒ S2. Always ⊆ R, and
/// equals R with the 0-row trimmed to {0₂}.
CrispRep double_pseudo_inverse(const CrispRep& r);

/// Condition (c): (x, y) ∈ R and y' ≪ y imply some x' ≪ x with (x', y') ∈ R.
/// Witness on failure: (x, y, y').
Verdict is_pseudo_invertible(const CrispRep& r);

/// Whether R lies in the image of the morphism embedding:
/// x1 R y1, x2 R y2, y ≤ y1, y ≤ y2 imply some x ≤ x1, x2 with x R y.
/// Witness on failure: (x1, x2, y), swept from the least specific elements.
Verdict is_sem0_arrow(const CrispRep& r);

}  // namespace ambrep
