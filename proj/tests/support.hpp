#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ambrep/catalog.hpp"
#include "ambrep/crisp.hpp"
#include "ambrep/fuzzy.hpp"

namespace testing {

using namespace ambrep;

using NamePairs = std::vector<std::pair<std::string, std::string>>;

inline FinitePoset poset(std::vector<std::string> names, const NamePairs& less) {
  return FinitePoset::from_pairs(std::move(names), less);
}

inline Index ix(const FinitePoset& p, const std::string& name) { return *p.index_of(name); }
inline Index ix(const SemilatticePtr& s, const std::string& name) { return ix(s->poset(), name); }

inline ElementSet named(const FinitePoset& p, const std::vector<std::string>& names) {
  ElementSet s(p.size());
  for (const auto& n : names) s.set(ix(p, n));
  return s;
}

inline SemilatticePtr c2() { return make_semilattice(catalog::chain(2)); }
inline SemilatticePtr c3() { return make_semilattice(catalog::chain(3)); }
inline SemilatticePtr d4() { return make_semilattice(catalog::diamond()); }
inline SemilatticePtr v3() { return make_semilattice(catalog::vee()); }

/// Exactly the listed pairs.
inline BoolMatrix pairs(const SemilatticePtr& a, const SemilatticePtr& b, const NamePairs& list) {
  BoolMatrix t(a->size(), b->size());
  for (const auto& [x, y] : list) t.set(ix(a, x), ix(b, y));
  return t;
}

inline CrispRep rep(const SemilatticePtr& a, const SemilatticePtr& b, const NamePairs& list) {
  return check_rep(pairs(a, b, list), a, b);
}

/// Dual element generated by base element `name` (the ∅ filter for 0).
inline Index up(const SemilatticePtr& s, const std::string& name) {
  return lawson_dual(s).filter_of(ix(s, name));
}

}  // namespace testing
