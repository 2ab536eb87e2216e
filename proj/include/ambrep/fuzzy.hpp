#pragma once

#include <vector>

#include "ambrep/compat.hpp"
#include "ambrep/crisp.hpp"
#include "ambrep/order.hpp"

namespace ambrep {

/// Finite unital quantale: a distributive lattice L with an associative
/// multiplication that distributes over binary joins on both sides, has a
/// two-sided unit and 0 as an absorbing element. The unit is usually the
/// top 1 but need not be (relations under composition have the identity).
class Quantale {
 public:
  Quantale() = default;

  const LatticePtr& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_->size(); }
  const std::string& name(Index a) const { return lattice_->name(a); }
  Index mul(Index a, Index b) const { return mul_[a * size() + b]; }
  const std::vector<Index>& mul_table() const noexcept { return mul_; }
  Index zero() const noexcept { return lattice_->zero(); }
  Index one() const noexcept { return lattice_->one(); }
  Index unit() const noexcept { return unit_; }
  /// The unit is the top.
  bool integral() const noexcept { return unit_ == one(); }
  bool commutative() const;

  bool operator==(const Quantale& other) const {
    return mul_ == other.mul_ && *lattice_ == *other.lattice_;
  }

 private:
  friend Quantale check_quantale(LatticePtr, std::vector<Index>);
  LatticePtr lattice_;
  std::vector<Index> mul_;
  Index unit_ = 0;
};

/// The unit is located, not given: the clause "unit" fails when no element
/// is a two-sided unit (the witness is where 1 fails).
/// Clauses: "unit", "zero", "associative", "join-left", "join-right",
/// "distributive" (of the lattice). Throws QuantaleViolated.
Quantale check_quantale(LatticePtr lattice, std::vector<Index> mul);

/// α ∗̂ β = β ∗ α.
Quantale opposite_quantale(const Quantale& q);

/// ∗ = ∧.
Quantale meet_quantale(const LatticePtr& lattice);

/// L-fuzzy ambiguous representation stored as its grade table:
/// (x, y, α) ∈ R ⟺ α ≤ g(x, y).
///   g(x, 0₂) = 1; g monotone in x; g antitone in y.
class FuzzyRep {
 public:
  FuzzyRep() = default;

  const SemilatticePtr& source() const noexcept { return source_; }
  const SemilatticePtr& target() const noexcept { return target_; }
  const LatticePtr& lattice() const noexcept { return lattice_; }
  Index grade(Index x, Index y) const { return grade_[x * target_->size() + y]; }
  /// Row-major, |S1| × |S2|.
  const std::vector<Index>& grades() const noexcept { return grade_; }
  bool contains(Index x, Index y, Index alpha) const {
    return lattice_->leq(alpha, grade(x, y));
  }

  bool operator==(const FuzzyRep& other) const {
    return grade_ == other.grade_ && same_semilattice(source_, other.source_) &&
           same_semilattice(target_, other.target_) && *lattice_ == *other.lattice_;
  }

 private:
  friend FuzzyRep check_fuzzy_rep(std::vector<Index>, SemilatticePtr, SemilatticePtr,
                                  LatticePtr);
  SemilatticePtr source_;
  SemilatticePtr target_;
  LatticePtr lattice_;
  std::vector<Index> grade_;
};

/// Clauses: "zero-column" (g(x,0₂) = 1), "column-upper", "row-lower", and
/// "(c)" if the three forms of the grade condition disagree on the induced
/// ternary relation. Throws FuzzyRepViolated with witness (x, y) or
/// (x, x', y) / (x, y, y').
FuzzyRep check_fuzzy_rep(std::vector<Index> grade, SemilatticePtr source, SemilatticePtr target,
                         LatticePtr lattice);

/// Raw ternary relation: bit (x * |S2| + y) * |L| + α.
using TernaryRelation = ElementSet;

TernaryRelation to_ternary(const FuzzyRep& r);

/// Accepts a ternary relation satisfying the second definition (cuts are
/// crisp representations, each xyR a principal lower set) and converts it to
/// grades. Throws FuzzyRepViolated.
FuzzyRep from_ternary(const TernaryRelation& t, const SemilatticePtr& source,
                      const SemilatticePtr& target, const LatticePtr& lattice);

/// Evaluates the three equivalent forms of the grade condition on xyR.
struct GradeForms {
  bool c1 = false;  ///< non-empty, directed, Scott closed
  bool c2 = false;  ///< non-empty directed lower set, closed under ≪-approximation
  bool c3 = false;  ///< principal lower set
};
GradeForms grade_forms(const BoundedLattice& lattice, const ElementSet& xyr);

/// Grade-wise inclusion on equal carriers.
bool is_subrep(const FuzzyRep& a, const FuzzyRep& b);

FuzzyRep embed_crisp(const CrispRep& r, const LatticePtr& lattice);

/// R_α = {(x, y) | α ≤ g(x, y)}.
CrispRep alpha_cut(const FuzzyRep& r, Index alpha);

/// Cuts indexed by the elements of L.
struct CutFamily {
  LatticePtr lattice;
  std::vector<CrispRep> cuts;
};

CutFamily to_cuts(const FuzzyRep& r);
/// Clauses: "carriers", "zero-full", "antitone", "peak". Throws
/// CutFamilyInvalid.
FuzzyRep from_cuts(const CutFamily& family);

/// (R^♯)_α = ⋂_{β≪α} (R_β)^♯ over the canonical pairings, evaluated cut by
/// cut. The result is an L-representation S2^∧ ⇒ S1^∧ (to be composed with
/// the opposite quantale).
FuzzyRep fuzzy_pseudo_inverse(const FuzzyRep& r);

/// Same formula over arbitrary separating compatibilities, giving
/// Ŝ2 ⇒ Ŝ1. Throws NotSeparating.
FuzzyRep fuzzy_pseudo_inverse(const FuzzyRep& r, const Compatibility& p1,
                              const Compatibility& p2);

/// Grade form of the canonical pseudo-inverse:
/// ĝ(↑t, ↑s) = g(s, t), ĝ(ŷ, ∅) = 1, ĝ(∅, x̂) = 0 for x̂ ≠ ∅.
FuzzyRep fuzzy_pseudo_inverse_shortcut(const FuzzyRep& r);

FuzzyRep fuzzy_double_pseudo_inverse(const FuzzyRep& r);

/// Condition (d) evaluated literally. Witness: (x, y, α, y', α').
Verdict is_pseudo_invertible_fuzzy(const FuzzyRep& r);

/// R ⊛ Q as the (∨, ∗) matrix product h(x,z) = ⋁_y g_R(x,y) ∗ g_Q(y,z),
/// computed with the parallel kernel. Throws MiddleMismatch,
/// QuantaleLatticeMismatch.
FuzzyRep compose_fuzzy(const FuzzyRep& r, const FuzzyRep& q, const Quantale& quantale);

/// R ⊛ Q from the closure definition: (x, z, α) is in iff α' ≤ (R∗Q)(x, z')
/// for all z' ≪ z and α' ≪ α.
FuzzyRep compose_fuzzy_closure(const FuzzyRep& r, const FuzzyRep& q, const Quantale& quantale);

}  // namespace ambrep
