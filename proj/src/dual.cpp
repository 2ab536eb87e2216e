#include "ambrep/dual.hpp"

#include <algorithm>

namespace ambrep {

std::string dual_name(std::string_view name) {
  if (!name.empty() && name.front() == '^') return std::string(name.substr(1));
  return "^" + std::string(name);
}

Verdict check_morphism(const MeetSemilattice& source, const MeetSemilattice& target,
                       const std::vector<Index>& table) {
  const std::size_t n = source.size();
  if (table.size() != n) return Verdict::no({}, "table size does not match the source");
  for (Index x = 0; x < n; ++x)
    if (table[x] >= target.size()) return Verdict::no({x}, "image out of range");
  if (table[source.zero()] != target.zero())
    return Verdict::no({source.zero()}, "zero is not mapped to zero");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (source.leq(a, b) && !target.leq(table[a], table[b]))
        return Verdict::no({a, b}, "not monotone at " + source.name(a) + " <= " + source.name(b));
      if (table[source.meet(a, b)] != target.meet(table[a], table[b]))
        return Verdict::no({a, b},
                           "meet of " + source.name(a) + ", " + source.name(b) + " not preserved");
    }
  return Verdict::yes();
}

SemilatticeMorphism::SemilatticeMorphism(SemilatticePtr source, SemilatticePtr target,
                                         std::vector<Index> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (auto v = check_morphism(*source_, *target_, table_); !v)
    throw Error(ErrorKind::NotMorphism, v.detail, {}, v.witness);
}

SemilatticeMorphism identity_morphism(const SemilatticePtr& s) {
  std::vector<Index> table(s->size());
  for (Index i = 0; i < table.size(); ++i) table[i] = i;
  return SemilatticeMorphism(s, s, std::move(table));
}

SemilatticeMorphism then(const SemilatticeMorphism& f, const SemilatticeMorphism& g) {
  if (!same_semilattice(f.target(), g.source()))
    throw Error(ErrorKind::MiddleMismatch, "morphisms are not composable");
  std::vector<Index> table(f.table().size());
  for (Index x = 0; x < table.size(); ++x) table[x] = g(f(x));
  return SemilatticeMorphism(f.source(), g.target(), std::move(table));
}

SemilatticeMorphism constant_zero(const SemilatticePtr& source, const SemilatticePtr& target) {
  return SemilatticeMorphism(source, target, std::vector<Index>(source->size(), target->zero()));
}

// ---------------------------------------------------------------------------

DualSemilattice::DualSemilattice(SemilatticePtr base, SemilatticePtr dual,
                                 std::vector<ElementSet> filters)
    : base_(std::move(base)), dual_(std::move(dual)), filters_(std::move(filters)) {}

std::optional<Index> DualSemilattice::generator(Index i) const {
  if (filters_[i].none()) return std::nullopt;
  return i;
}

std::optional<Index> DualSemilattice::find(const ElementSet& filter) const {
  if (filter.none()) return base_->zero();
  auto least = base_->poset().least(filter);
  if (!least || *least == base_->zero() || base_->poset().up_set(*least) != filter)
    return std::nullopt;
  return *least;
}

DualSemilattice lawson_dual(const SemilatticePtr& s) {
  const MeetSemilattice& base = *s;
  const std::size_t n = base.size();
  const Index zero = base.zero();

  std::vector<ElementSet> filters(n);
  std::vector<std::string> names(n);
  for (Index i = 0; i < n; ++i) {
    filters[i] = i == zero ? ElementSet(n) : base.poset().up_set(i);
    names[i] = dual_name(base.name(i));
  }
  BoolMatrix leq(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (filters[i].is_subset_of(filters[j])) leq.set(i, j);

  // The meet of two filters is their intersection: ↑(s ∨ t) when the join
  // exists, otherwise ∅.
  std::vector<Index> meet(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      ElementSet both = filters[i] & filters[j];
      Index m = zero;
      if (both.any()) m = *base.poset().least(both);
      meet[i * n + j] = m;
    }

  auto dual = std::make_shared<const MeetSemilattice>(
      FinitePoset::from_table(std::move(names), std::move(leq)), std::move(meet), zero);
  return DualSemilattice(s, std::move(dual), std::move(filters));
}

SemilatticePtr dual_of(const SemilatticePtr& s) { return lawson_dual(s).semilattice(); }

SemilatticeMorphism dual_map(const SemilatticeMorphism& f) {
  DualSemilattice d1 = lawson_dual(f.source());
  DualSemilattice d2 = lawson_dual(f.target());
  const std::size_t n1 = f.source()->size();
  std::vector<Index> table(d2.size());
  for (Index F = 0; F < d2.size(); ++F) {
    ElementSet preimage(n1);
    for (Index x = 0; x < n1; ++x)
      if (d2.filter(F).test(f(x))) preimage.set(x);
    auto g = d1.find(preimage);
    if (!g) throw Error(ErrorKind::NotMorphism, "PreimageNotProperFilter (internal)", {}, {F});
    table[F] = *g;
  }
  return SemilatticeMorphism(d2.semilattice(), d1.semilattice(), std::move(table));
}

SemilatticeMorphism canonical_iso(const SemilatticePtr& s) {
  DualSemilattice d1 = lawson_dual(s);
  DualSemilattice d2 = lawson_dual(d1.semilattice());
  const std::size_t n = s->size();
  std::vector<Index> table(n);
  for (Index x = 0; x < n; ++x) {
    ElementSet containing(d1.size());
    for (Index F = 0; F < d1.size(); ++F)
      if (d1.filter(F).test(x)) containing.set(F);
    auto u = d2.find(containing);
    if (!u) throw Error(ErrorKind::NotIso, "no double-dual element for " + s->name(x), {}, {x});
    table[x] = *u;
  }
  return SemilatticeMorphism(s, d2.semilattice(), std::move(table));
}

bool is_bijective(const SemilatticeMorphism& f) {
  if (f.source()->size() != f.target()->size()) return false;
  std::vector<bool> hit(f.target()->size(), false);
  for (Index y : f.table()) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool is_order_iso(const SemilatticeMorphism& f) {
  if (!is_bijective(f)) return false;
  const std::size_t n = f.source()->size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (f.source()->leq(a, b) != f.target()->leq(f(a), f(b))) return false;
  return true;
}

}  // namespace ambrep
