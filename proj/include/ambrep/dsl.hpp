#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ambrep/crisp.hpp"
#include "ambrep/dual.hpp"
#include "ambrep/fuzzy.hpp"
#include "ambrep/order.hpp"

// Text format for finite objects:
//
//   poset C3 { elements: 0 m 1; order: 0 < m, m < 1; }
//   map f : C2 -> C3 { 1 |-> m; }
//   rep R : C2 => C3 { 1 |> m; }
//   fuzzyrep G : C2 => C2 over C3 { (1, 1) = m; }
//   quantale Q over C3 { mul(m, m) = m; mul(m, 1) = m; ... }
//
// '#' starts a line comment. Unlisted map entries go to the target's zero,
// unlisted grades are 0, and the pairs (x, 0₂) / grades g(x, 0₂) = 1 are
// implied.

namespace ambrep::dsl {

struct Span {
  SourcePos begin;
  SourcePos end;
};

struct PosetItem {
  std::string name;
  FinitePoset poset;
  Span span;
};

struct MapItem {
  std::string name;
  std::string source;
  std::string target;
  SemilatticeMorphism map;
  Span span;
};

struct RepItem {
  std::string name;
  std::string source;
  std::string target;
  CrispRep rep;
  Span span;
};

struct FuzzyRepItem {
  std::string name;
  std::string source;
  std::string target;
  std::string lattice;
  FuzzyRep rep;
  Span span;
};

struct QuantaleItem {
  std::string name;
  std::string lattice;
  Quantale quantale;
  Span span;
};

using Item = std::variant<PosetItem, MapItem, RepItem, FuzzyRepItem, QuantaleItem>;

const std::string& item_name(const Item& item);

/// Named definitions in source order. Equality ignores spans.
class Document {
 public:
  const std::vector<Item>& items() const noexcept { return items_; }
  const Item* find(std::string_view name) const;

  /// Lookups throw UnknownElement when the name is missing or of another
  /// kind; semilattice() and lattice() also throw NoMeet, NoBottom, NoJoin,
  /// NoTop.
  const FinitePoset& poset(std::string_view name) const;
  SemilatticePtr semilattice(std::string_view name) const;
  LatticePtr lattice(std::string_view name) const;
  const MapItem& map(std::string_view name) const;
  const RepItem& rep(std::string_view name) const;
  const FuzzyRepItem& fuzzy_rep(std::string_view name) const;
  const QuantaleItem& quantale(std::string_view name) const;

  /// Appends a definition; throws DuplicateElement on a name clash.
  void add(Item item);

  void add_poset(const std::string& name, const FinitePoset& poset);
  void add_rep(const std::string& name, const std::string& source, const std::string& target,
               const CrispRep& rep);
  void add_fuzzy_rep(const std::string& name, const std::string& source,
                     const std::string& target, const std::string& lattice, const FuzzyRep& rep);
  void add_quantale(const std::string& name, const std::string& lattice, const Quantale& q);
  void add_map(const std::string& name, const std::string& source, const std::string& target,
               const SemilatticeMorphism& map);

  bool operator==(const Document& other) const;

 private:
  std::vector<Item> items_;
};

struct ParseOptions {
  /// Replace invalid maps, representations and grade tables by their least
  /// valid completion instead of rejecting them.
  bool normalize = false;
};

/// Throws SourceError: ParseError for syntax (with the expected token) or
/// ResolveError for names and invariants (with the underlying kind as
/// cause).
Document parse(std::string_view text, const ParseOptions& options = {});

/// Canonical text: elements in index order, order given by covers, every
/// map entry, rep pairs except (x, 0₂), grades other than 0 away from the
/// 0₂ column, products other than 0.
std::string render(const Document& doc);

}  // namespace ambrep::dsl
