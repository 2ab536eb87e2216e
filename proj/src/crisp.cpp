#include "ambrep/crisp.hpp"

#include <algorithm>
#include <numeric>

#include "ambrep/kernels.hpp"

namespace ambrep {

CrispRep check_rep(BoolMatrix table, SemilatticePtr source, SemilatticePtr target) {
  const FinitePoset& p1 = source->poset();
  const FinitePoset& p2 = target->poset();
  if (table.rows() != p1.size() || table.cols() != p2.size())
    throw Error(ErrorKind::DimensionMismatch, "representation table does not match carriers");

  for (Index x = 0; x < p1.size(); ++x) {
    const ElementSet& row = table.row(x);
    if (row.none())
      throw Error(ErrorKind::RepViolated, "row " + p1.name(x) + " is empty", "row-nonempty",
                  {x});
    for (Index y : members(row)) {
      ElementSet missing = p2.down_set(y) - row;
      if (missing.any()) {
        Index y2 = missing.find_first();
        throw Error(ErrorKind::RepViolated,
                    "row " + p1.name(x) + " contains " + p2.name(y) + " but not " + p2.name(y2),
                    "row-lower", {x, y2});
      }
    }
  }
  for (Index y = 0; y < p2.size(); ++y) {
    ElementSet col = table.column(y);
    for (Index x : members(col)) {
      ElementSet missing = p1.up_set(x) - col;
      if (missing.any()) {
        Index x2 = missing.find_first();
        throw Error(ErrorKind::RepViolated,
                    "column " + p2.name(y) + " contains " + p1.name(x) + " but not " + p1.name(x2),
                    "column-upper", {x2, y});
      }
    }
  }
  CrispRep r;
  r.source_ = std::move(source);
  r.target_ = std::move(target);
  r.table_ = std::move(table);
  return r;
}

CrispRep complete_rep(const BoolMatrix& seeds, const SemilatticePtr& source,
                      const SemilatticePtr& target) {
  const FinitePoset& p1 = source->poset();
  const FinitePoset& p2 = target->poset();
  BoolMatrix table(p1.size(), p2.size());
  for (Index x = 0; x < p1.size(); ++x) {
    table.set(x, target->zero());
    for (Index y : members(seeds.row(x)))
      for (Index x2 : members(p1.up_set(x))) table.row(x2) |= p2.down_set(y);
  }
  return check_rep(std::move(table), source, target);
}

bool is_subrep(const CrispRep& a, const CrispRep& b) {
  return same_semilattice(a.source(), b.source()) && same_semilattice(a.target(), b.target()) &&
         a.table().subset_of(b.table());
}

CrispRep full_rep(const SemilatticePtr& source, const SemilatticePtr& target) {
  return check_rep(BoolMatrix(source->size(), target->size(), true), source, target);
}

CrispRep identity_rep(const SemilatticePtr& s) {
  BoolMatrix table(s->size(), s->size());
  for (Index x = 0; x < s->size(); ++x) table.row(x) = s->poset().down_set(x);
  return check_rep(std::move(table), s, s);
}

CrispRep embed_morphism(const SemilatticeMorphism& f) {
  const SemilatticePtr& t = f.target();
  BoolMatrix table(f.source()->size(), t->size());
  for (Index x = 0; x < f.source()->size(); ++x) table.row(x) = t->poset().down_set(f(x));
  return check_rep(std::move(table), f.source(), t);
}

SemilatticeMorphism rep_to_morphism(const CrispRep& r) {
  std::vector<Index> table(r.source()->size());
  for (Index x = 0; x < table.size(); ++x) {
    auto top = r.target()->poset().greatest(r.row(x));
    if (!top)
      throw Error(ErrorKind::NotFunctional,
                  "row " + r.source()->name(x) + " has no greatest element", {}, {x});
    table[x] = *top;
  }
  if (auto v = check_morphism(*r.source(), *r.target(), table); !v)
    throw Error(ErrorKind::NotFunctional, "row maxima do not form a morphism: " + v.detail, {},
                v.witness);
  return SemilatticeMorphism(r.source(), r.target(), std::move(table));
}

CrispRep compose(const CrispRep& r, const CrispRep& q) {
  if (!same_semilattice(r.target(), q.source()))
    throw Error(ErrorKind::MiddleMismatch, "middle semilattices differ");
  return check_rep(kernels::bool_product_parallel(r.table(), q.table()), r.source(), q.target());
}

CrispRep compose_closure(const CrispRep& r, const CrispRep& q) {
  if (!same_semilattice(r.target(), q.source()))
    throw Error(ErrorKind::MiddleMismatch, "middle semilattices differ");
  const MeetSemilattice& s3 = *q.target();
  BoolMatrix table(r.source()->size(), s3.size());
  for (Index x = 0; x < table.rows(); ++x)
    for (Index z = 0; z < s3.size(); ++z) {
      bool all = true;
      for (Index z2 = 0; z2 < s3.size() && all; ++z2) {
        if (!s3.way_below(z2, z)) continue;
        bool found = false;
        for (Index y : members(r.row(x)))
          if (q.contains(y, z2)) {
            found = true;
            break;
          }
        all = found;
      }
      table.set(x, z, all);
    }
  return check_rep(std::move(table), r.source(), q.target());
}

CrispRep pseudo_inverse(const CrispRep& r) {
  BoolMatrix table =
      kernels::pinv_transpose_parallel(r.table(), r.source()->zero(), r.target()->zero());
  return check_rep(std::move(table), dual_of(r.target()), dual_of(r.source()));
}

namespace {

void require_separating(const CrispRep& r, const Compatibility& p1, const Compatibility& p2) {
  if (!same_semilattice(p1.left(), r.source()) || !same_semilattice(p2.left(), r.target()))
    throw Error(ErrorKind::DimensionMismatch, "compatibilities do not match the representation");
  if (auto v = check_separating(p1); !v)
    throw Error(ErrorKind::NotSeparating, "P1 does not separate " + v.detail, {}, v.witness);
  if (auto v = check_separating(p2); !v)
    throw Error(ErrorKind::NotSeparating, "P2 does not separate " + v.detail, {}, v.witness);
}

}  // namespace

CrispRep pseudo_inverse(const CrispRep& r, const Compatibility& p1, const Compatibility& p2) {
  require_separating(r, p1, p2);
  const std::size_t n1 = r.source()->size();
  const std::size_t m2 = p2.right()->size();

  std::vector<ElementSet> row_perp(n1);
  for (Index x = 0; x < n1; ++x) row_perp[x] = transversal(p2, r.row(x), Side::Left);

  BoolMatrix table(m2, p1.right()->size());
  for (Index yh = 0; yh < m2; ++yh) {
    ElementSet a(n1);
    for (Index x = 0; x < n1; ++x)
      if (row_perp[x].test(yh)) a.set(x);
    table.row(yh) = transversal(p1, a, Side::Left);
  }
  return check_rep(std::move(table), p2.right(), p1.right());
}

CrispRep to_canonical_duals(const CrispRep& native, const Compatibility& p1,
                            const Compatibility& p2) {
  DualSemilattice d1 = lawson_dual(p1.left());
  DualSemilattice d2 = lawson_dual(p2.left());
  auto lookup = [](const DualSemilattice& d, const Compatibility& p) {
    std::vector<Index> map(p.right()->size());
    for (Index h = 0; h < map.size(); ++h) {
      auto f = d.find(p.column(h));
      if (!f) throw Error(ErrorKind::NotIso, "column is not a proper filter", {}, {h});
      map[h] = *f;
    }
    return map;
  };
  const auto m2 = lookup(d2, p2);
  const auto m1 = lookup(d1, p1);
  BoolMatrix table(d2.size(), d1.size());
  for (Index yh = 0; yh < native.table().rows(); ++yh)
    for (Index xh : members(native.row(yh))) table.set(m2[yh], m1[xh]);
  return check_rep(std::move(table), d2.semilattice(), d1.semilattice());
}

CrispRep double_pseudo_inverse(const CrispRep& r) { return pseudo_inverse(pseudo_inverse(r)); }

Verdict is_pseudo_invertible(const CrispRep& r) {
  const MeetSemilattice& s1 = *r.source();
  const MeetSemilattice& s2 = *r.target();
  for (Index x = 0; x < s1.size(); ++x)
    for (Index y : members(r.row(x)))
      for (Index y2 = 0; y2 < s2.size(); ++y2) {
        if (!s2.way_below(y2, y)) continue;
        bool found = false;
        for (Index x2 = 0; x2 < s1.size() && !found; ++x2)
          found = s1.way_below(x2, x) && r.contains(x2, y2);
        if (!found)
          return Verdict::no({x, y, y2}, "x=" + s1.name(x) + ", y=" + s2.name(y) +
                                             ", y'=" + s2.name(y2) + ": no x' ≪ x with x' R y'");
      }
  return Verdict::yes();
}

Verdict is_sem0_arrow(const CrispRep& r) {
  const MeetSemilattice& s1 = *r.source();
  const MeetSemilattice& s2 = *r.target();
  std::vector<Index> order(s1.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return s1.poset().down_set(a).count() < s1.poset().down_set(b).count();
  });
  for (Index x1 : order)
    for (Index x2 : order) {
      ElementSet below = s1.poset().down_set(x1) & s1.poset().down_set(x2);
      for (Index y1 : members(r.row(x1)))
        for (Index y2 : members(r.row(x2))) {
          // Failures for some y ≤ y1, y2 are exactly failures at y1 ∧ y2.
          const Index y = s2.meet(y1, y2);
          bool found = false;
          for (Index x : members(below))
            if (r.contains(x, y)) {
              found = true;
              break;
            }
          if (!found)
            return Verdict::no({x1, x2, y}, "x1=" + s1.name(x1) + ", x2=" + s1.name(x2) +
                                                ", y=" + s2.name(y));
        }
    }
  return Verdict::yes();
}

}  // namespace ambrep
