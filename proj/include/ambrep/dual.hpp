#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ambrep/order.hpp"

namespace ambrep {

/// Name of the dual counterpart of an element or object: toggles a leading
/// '^'. Because the toggle is an involution, the double dual of a semilattice
/// carries exactly the names of the original.
std::string dual_name(std::string_view name);

/// Zero-preserving, meet-preserving (hence monotone) map between
/// semilattices with zero.
class SemilatticeMorphism {
 public:
  SemilatticeMorphism() = default;

  /// Throws NotMorphism with the violated clause and witness.
  SemilatticeMorphism(SemilatticePtr source, SemilatticePtr target, std::vector<Index> table);

  const SemilatticePtr& source() const noexcept { return source_; }
  const SemilatticePtr& target() const noexcept { return target_; }
  const std::vector<Index>& table() const noexcept { return table_; }
  Index operator()(Index x) const { return table_[x]; }

  bool operator==(const SemilatticeMorphism& other) const {
    return table_ == other.table_ && same_semilattice(source_, other.source_) &&
           same_semilattice(target_, other.target_);
  }

 private:
  SemilatticePtr source_;
  SemilatticePtr target_;
  std::vector<Index> table_;
};

/// Checks the morphism clauses without constructing.
Verdict check_morphism(const MeetSemilattice& source, const MeetSemilattice& target,
                       const std::vector<Index>& table);

SemilatticeMorphism identity_morphism(const SemilatticePtr& s);
/// The composite "first f, then g", i.e. g ∘ f.
SemilatticeMorphism then(const SemilatticeMorphism& f, const SemilatticeMorphism& g);
SemilatticeMorphism constant_zero(const SemilatticePtr& source, const SemilatticePtr& target);

/// The Lawson dual of a finite semilattice: all proper Scott-open filters,
/// the empty one included, ordered by inclusion.
///
/// Finite filters are principal, so element i of the dual is the filter
/// generated by element i of the base (↑i for i ≠ 0, ∅ for i = 0). The dual
/// therefore has the same carrier size and its zero sits at the base's zero
/// index. Element names are `dual_name` of the generator's name.
class DualSemilattice {
 public:
  DualSemilattice() = default;
  DualSemilattice(SemilatticePtr base, SemilatticePtr dual, std::vector<ElementSet> filters);

  const SemilatticePtr& base() const noexcept { return base_; }
  /// The dual as a semilattice in its own right.
  const SemilatticePtr& semilattice() const noexcept { return dual_; }
  std::size_t size() const noexcept { return filters_.size(); }

  /// Members of the base belonging to dual element i.
  const ElementSet& filter(Index i) const { return filters_[i]; }
  /// Base element generating the filter; empty for the ∅ filter.
  std::optional<Index> generator(Index i) const;

  /// Dual element whose filter is exactly `filter`.
  std::optional<Index> find(const ElementSet& filter) const;

  /// Dual element corresponding to base element s (∅ for the zero).
  Index filter_of(Index s) const { return s; }
  /// Inverse of filter_of; the ∅ filter maps back to the base zero.
  Index element_of(Index f) const { return f; }

 private:
  SemilatticePtr base_;
  SemilatticePtr dual_;
  std::vector<ElementSet> filters_;
};

DualSemilattice lawson_dual(const SemilatticePtr& s);

/// Convenience: the dual's semilattice only.
SemilatticePtr dual_of(const SemilatticePtr& s);

/// f : S1 → S2 gives f^∧ : S2^∧ → S1^∧, F ↦ f⁻¹(F).
SemilatticeMorphism dual_map(const SemilatticeMorphism& f);

/// u_S : S → S^∧∧, s ↦ {F ∈ S^∧ | s ∈ F}.
SemilatticeMorphism canonical_iso(const SemilatticePtr& s);

bool is_bijective(const SemilatticeMorphism& f);
/// Bijective with monotone inverse.
bool is_order_iso(const SemilatticeMorphism& f);

}  // namespace ambrep
