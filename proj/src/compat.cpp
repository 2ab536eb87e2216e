#include "ambrep/compat.hpp"

namespace ambrep {

Compatibility check_compatibility(BoolMatrix table, SemilatticePtr left, SemilatticePtr right) {
  const MeetSemilattice& s = *left;
  const MeetSemilattice& t = *right;
  if (table.rows() != s.size() || table.cols() != t.size())
    throw Error(ErrorKind::DimensionMismatch, "compatibility table does not match carriers");

  for (Index y = 0; y < t.size(); ++y)
    if (table.test(s.zero(), y))
      throw Error(ErrorKind::AxiomViolated,
                  "P(0, " + t.name(y) + ") = 1", "(1)", {s.zero(), y});
  for (Index x = 0; x < s.size(); ++x)
    if (table.test(x, t.zero()))
      throw Error(ErrorKind::AxiomViolated,
                  "P(" + s.name(x) + ", 0') = 1", "(1)", {x, t.zero()});

  for (Index y = 0; y < t.size(); ++y)
    for (Index a = 0; a < s.size(); ++a)
      for (Index b = 0; b < s.size(); ++b)
        if (table.test(s.meet(a, b), y) != (table.test(a, y) && table.test(b, y)))
          throw Error(ErrorKind::AxiomViolated,
                      "not ∧-distributive in the first argument at " + s.name(a) + ", " +
                          s.name(b) + " against " + t.name(y),
                      "(1)", {a, b, y});
  for (Index x = 0; x < s.size(); ++x)
    for (Index a = 0; a < t.size(); ++a)
      for (Index b = 0; b < t.size(); ++b)
        if (table.test(x, t.meet(a, b)) != (table.test(x, a) && table.test(x, b)))
          throw Error(ErrorKind::AxiomViolated,
                      "not ∧-distributive in the second argument at " + s.name(x) +
                          " against " + t.name(a) + ", " + t.name(b),
                      "(1)", {x, a, b});

  // Monotonicity follows from ∧-distributivity; kept as the explicit clause.
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < t.size(); ++y) {
      if (!table.test(x, y)) continue;
      if (!s.poset().up_set(x).is_subset_of(table.column(y)) ||
          !t.poset().up_set(y).is_subset_of(table.row(x)))
        throw Error(ErrorKind::AxiomViolated, "not monotone", "(2)", {x, y});
    }

  Compatibility p;
  p.left_ = std::move(left);
  p.right_ = std::move(right);
  p.table_ = std::move(table);
  return p;
}

Verdict check_separating(const Compatibility& p) {
  const BoolMatrix& t = p.table();
  for (Index a = 0; a < t.rows(); ++a)
    for (Index b = a + 1; b < t.rows(); ++b)
      if (t.row(a) == t.row(b)) return Verdict::no({a, b}, "rows");
  BoolMatrix tt = t.transposed();
  for (Index a = 0; a < tt.rows(); ++a)
    for (Index b = a + 1; b < tt.rows(); ++b)
      if (tt.row(a) == tt.row(b)) return Verdict::no({a, b}, "columns");
  return Verdict::yes();
}

Compatibility canonical_pairing(const SemilatticePtr& s) {
  DualSemilattice d = lawson_dual(s);
  BoolMatrix table(s->size(), d.size());
  for (Index F = 0; F < d.size(); ++F)
    for (Index x : members(d.filter(F))) table.set(x, F);
  return check_compatibility(std::move(table), s, d.semilattice());
}

Compatibility reverse(const Compatibility& p) {
  return check_compatibility(p.table().transposed(), p.right(), p.left());
}

PolarIso compat_to_iso(const Compatibility& p) {
  if (auto v = check_separating(p); !v)
    throw Error(ErrorKind::NotSeparating, "compatibility does not separate " + v.detail, {},
                v.witness);
  DualSemilattice dual = lawson_dual(p.right());
  std::vector<Index> table(p.left()->size());
  for (Index x = 0; x < table.size(); ++x) {
    auto f = dual.find(p.row(x));
    if (!f) throw Error(ErrorKind::NotIso, "xP is not a proper filter", {}, {x});
    table[x] = *f;
  }
  SemilatticeMorphism iso(p.left(), dual.semilattice(), std::move(table));
  if (!is_order_iso(iso)) throw Error(ErrorKind::NotIso, "x ↦ xP is not an isomorphism");
  return {std::move(dual), std::move(iso)};
}

Compatibility iso_to_compat(const SemilatticeMorphism& iso, const DualSemilattice& dual) {
  if (!same_semilattice(iso.target(), dual.semilattice()) || !is_order_iso(iso))
    throw Error(ErrorKind::NotIso, "map is not an isomorphism onto the dual");
  const std::size_t n = iso.source()->size();
  BoolMatrix table(n, dual.base()->size());
  for (Index x = 0; x < n; ++x) table.row(x) = dual.filter(iso(x));
  return check_compatibility(std::move(table), iso.source(), dual.base());
}

ElementSet transversal(const Compatibility& p, const ElementSet& a, Side side) {
  const BoolMatrix& t = p.table();
  if (side == Side::Left) {
    ElementSet hit(t.cols());
    for (Index x : members(a)) hit |= t.row(x);
    return ~hit;
  }
  ElementSet out(t.rows());
  for (Index x = 0; x < t.rows(); ++x)
    if (!t.row(x).intersects(a)) out.set(x);
  return out;
}

}  // namespace ambrep
