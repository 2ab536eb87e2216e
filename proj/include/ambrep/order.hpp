#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ambrep/error.hpp"

namespace ambrep {

/// A subset of a finite carrier, one bit per element index.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

ElementSet make_set(std::size_t size, std::initializer_list<Index> members);
std::vector<Index> members(const ElementSet& set);

/// Dense boolean table, stored as one bitset per row.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols, bool value = false);

  std::size_t rows() const noexcept { return data_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool test(Index r, Index c) const { return data_[r].test(c); }
  void set(Index r, Index c, bool value = true) { data_[r].set(c, value); }

  const ElementSet& row(Index r) const { return data_[r]; }
  ElementSet& row(Index r) { return data_[r]; }
  ElementSet column(Index c) const;

  BoolMatrix transposed() const;
  std::size_t count() const;
  /// Entrywise inclusion; false on dimension mismatch.
  bool subset_of(const BoolMatrix& other) const;

  bool operator==(const BoolMatrix&) const = default;

 private:
  std::vector<ElementSet> data_;
  std::size_t cols_ = 0;
};

/// Finite partial order on named elements. All derived tables (up-sets,
/// down-sets, way-below) are computed once at construction.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds the reflexive-transitive closure of `less` (covers or any
  /// generating pairs). Throws CycleDetected, UnknownElement,
  /// DuplicateElement, EmptyCarrier.
  static FinitePoset from_pairs(std::vector<std::string> names,
                                std::span<const std::pair<std::string, std::string>> less);

  /// Same, with pairs already given as indices.
  static FinitePoset from_index_pairs(std::vector<std::string> names,
                                      std::span<const std::pair<Index, Index>> less);

  /// `leq.test(i, j)` means element i is below element j. The table must
  /// already be a partial order; violations throw.
  static FinitePoset from_table(std::vector<std::string> names, BoolMatrix leq);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Index i) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Index> index_of(std::string_view name) const;

  bool leq(Index a, Index b) const { return up_.test(a, b); }
  bool less(Index a, Index b) const { return a != b && leq(a, b); }
  /// {b | a <= b}
  const ElementSet& up_set(Index a) const { return up_.row(a); }
  /// {b | b <= a}
  const ElementSet& down_set(Index a) const { return down_.row(a); }
  const BoolMatrix& order() const noexcept { return up_; }

  std::optional<Index> bottom() const noexcept { return bottom_; }
  std::optional<Index> top() const noexcept { return top_; }

  /// x << y. Finite shortcut: x <= y and y is not the bottom.
  bool way_below(Index x, Index y) const { return wb_.test(x, y); }
  const BoolMatrix& way_below_table() const noexcept { return wb_; }

  /// Pairs (a, b) with a covered by b, in index order.
  std::vector<std::pair<Index, Index>> covers() const;

  /// Minimal elements of `set`, by index.
  std::vector<Index> minimal(const ElementSet& set) const;
  std::vector<Index> maximal(const ElementSet& set) const;
  std::optional<Index> least(const ElementSet& set) const;
  std::optional<Index> greatest(const ElementSet& set) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet(size()).set(); }

  bool operator==(const FinitePoset& other) const {
    return names_ == other.names_ && up_ == other.up_;
  }

 private:
  void finish();

  std::vector<std::string> names_;
  std::unordered_map<std::string, Index> index_;
  BoolMatrix up_;
  BoolMatrix down_;
  BoolMatrix wb_;
  std::optional<Index> bottom_;
  std::optional<Index> top_;
};

/// Meet-semilattice with zero over a finite poset.
class MeetSemilattice {
 public:
  MeetSemilattice() = default;
  MeetSemilattice(FinitePoset poset, std::vector<Index> meet, Index zero)
      : poset_(std::move(poset)), meet_(std::move(meet)), zero_(zero) {}

  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::string& name(Index i) const { return poset_.name(i); }
  bool leq(Index a, Index b) const { return poset_.leq(a, b); }
  bool way_below(Index a, Index b) const { return poset_.way_below(a, b); }
  Index meet(Index a, Index b) const { return meet_[a * size() + b]; }
  Index zero() const noexcept { return zero_; }
  const std::vector<Index>& meet_table() const noexcept { return meet_; }

  bool operator==(const MeetSemilattice&) const = default;

 private:
  FinitePoset poset_;
  std::vector<Index> meet_;
  Index zero_ = 0;
};

/// Bounded lattice: a meet-semilattice with zero plus binary joins and a top.
class BoundedLattice {
 public:
  BoundedLattice() = default;
  BoundedLattice(MeetSemilattice semilattice, std::vector<Index> join, Index one)
      : semi_(std::move(semilattice)), join_(std::move(join)), one_(one) {}

  const MeetSemilattice& semilattice() const noexcept { return semi_; }
  const FinitePoset& poset() const noexcept { return semi_.poset(); }
  std::size_t size() const noexcept { return semi_.size(); }
  const std::string& name(Index i) const { return semi_.name(i); }
  bool leq(Index a, Index b) const { return semi_.leq(a, b); }
  bool way_below(Index a, Index b) const { return semi_.way_below(a, b); }
  Index meet(Index a, Index b) const { return semi_.meet(a, b); }
  Index join(Index a, Index b) const { return join_[a * size() + b]; }
  Index zero() const noexcept { return semi_.zero(); }
  Index one() const noexcept { return one_; }
  /// Join of an arbitrary subset; the empty join is zero.
  Index join_of(const ElementSet& set) const;

  bool operator==(const BoundedLattice&) const = default;

 private:
  MeetSemilattice semi_;
  std::vector<Index> join_;
  Index one_ = 0;
};

using SemilatticePtr = std::shared_ptr<const MeetSemilattice>;
using LatticePtr = std::shared_ptr<const BoundedLattice>;

/// Views a lattice as its underlying meet-semilattice, sharing ownership.
SemilatticePtr as_semilattice(const LatticePtr& lattice);

/// Equality of semilattices by value (pointers may differ).
bool same_semilattice(const SemilatticePtr& a, const SemilatticePtr& b);

FinitePoset validate_poset(std::vector<std::string> names,
                           std::span<const std::pair<std::string, std::string>> less);

/// Greatest lower bound of a and b, if one exists.
std::optional<Index> glb(const FinitePoset& poset, Index a, Index b);
std::optional<Index> lub(const FinitePoset& poset, Index a, Index b);

/// Throws NoMeet (witness: the pair lacking a glb) or NoBottom.
MeetSemilattice meet_structure(const FinitePoset& poset);
/// Additionally requires joins and a top; throws NoJoin / NoTop.
BoundedLattice lattice_structure(const FinitePoset& poset);

SemilatticePtr make_semilattice(const FinitePoset& poset);
LatticePtr make_lattice(const FinitePoset& poset);

/// Way-below table of a finite poset. When a bottom exists nothing is way
/// below it (the empty directed set has the bottom as its supremum).
BoolMatrix way_below(const FinitePoset& poset);

/// Scott closure: the least lower set containing `set` and the bottom (if
/// any). The bottom is the supremum of the empty directed set, so every
/// Scott closed set contains it.
ElementSet scott_closure(const FinitePoset& poset, const ElementSet& set);
ElementSet upper_closure(const FinitePoset& poset, const ElementSet& set);

bool is_lower(const FinitePoset& poset, const ElementSet& set);
bool is_upper(const FinitePoset& poset, const ElementSet& set);
bool is_directed(const FinitePoset& poset, const ElementSet& set);
bool is_filtered(const FinitePoset& poset, const ElementSet& set);
/// Upper and closed under binary meets; the empty set qualifies.
bool is_filter(const MeetSemilattice& semilattice, const ElementSet& set);

/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) for all triples. For finite lattices this
/// decides complete distributivity.
Verdict check_distributive(const BoundedLattice& lattice);

FinitePoset opposite(const FinitePoset& poset);
/// Componentwise order; element (p, q) has index p * |Q| + q and name "(p,q)".
FinitePoset product(const FinitePoset& p, const FinitePoset& q);
/// Swaps meet and join.
BoundedLattice opposite(const BoundedLattice& lattice);

/// Whether an order isomorphism between two posets exists (backtracking).
std::optional<std::vector<Index>> find_isomorphism(const FinitePoset& a, const FinitePoset& b);

}  // namespace ambrep
