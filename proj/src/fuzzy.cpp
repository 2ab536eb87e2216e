#include "ambrep/fuzzy.hpp"

#include "ambrep/kernels.hpp"

namespace ambrep {

namespace {

Error quantale_error(const std::string& clause, const std::string& message,
                     std::vector<Index> witness) {
  return Error(ErrorKind::QuantaleViolated, message, clause, std::move(witness));
}

std::vector<Index> join_table(const BoundedLattice& l) {
  std::vector<Index> t(l.size() * l.size());
  for (Index a = 0; a < l.size(); ++a)
    for (Index b = 0; b < l.size(); ++b) t[a * l.size() + b] = l.join(a, b);
  return t;
}

}  // namespace

bool Quantale::commutative() const {
  for (Index a = 0; a < size(); ++a)
    for (Index b = a + 1; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Quantale check_quantale(LatticePtr lattice, std::vector<Index> mul) {
  const BoundedLattice& l = *lattice;
  const std::size_t n = l.size();
  if (mul.size() != n * n)
    throw Error(ErrorKind::DimensionMismatch, "multiplication table does not match the lattice");
  for (Index v : mul)
    if (v >= n) throw Error(ErrorKind::DimensionMismatch, "multiplication value out of range");
  auto m = [&](Index a, Index b) { return mul[a * n + b]; };

  auto is_unit = [&](Index e) {
    for (Index a = 0; a < n; ++a)
      if (m(e, a) != a || m(a, e) != a) return false;
    return true;
  };
  std::optional<Index> unit;
  if (is_unit(l.one())) unit = l.one();
  for (Index e = 0; e < n && !unit; ++e)
    if (is_unit(e)) unit = e;
  if (!unit) {
    for (Index a = 0; a < n; ++a)
      if (m(l.one(), a) != a || m(a, l.one()) != a)
        throw quantale_error("unit", "no two-sided unit; 1 fails at " + l.name(a), {a});
  }
  for (Index a = 0; a < n; ++a)
    if (m(a, l.zero()) != l.zero() || m(l.zero(), a) != l.zero())
      throw quantale_error("zero", "0 is not absorbing at " + l.name(a), {a});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c)))
          throw quantale_error("associative", "(a∗b)∗c ≠ a∗(b∗c)", {a, b, c});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        if (m(a, l.join(b, c)) != l.join(m(a, b), m(a, c)))
          throw quantale_error("join-left", "a∗(b∨c) ≠ (a∗b)∨(a∗c)", {a, b, c});
        if (m(l.join(b, c), a) != l.join(m(b, a), m(c, a)))
          throw quantale_error("join-right", "(b∨c)∗a ≠ (b∗a)∨(c∗a)", {a, b, c});
      }
  if (auto v = check_distributive(l); !v)
    throw quantale_error("distributive", "lattice is not distributive", v.witness);

  Quantale q;
  q.lattice_ = std::move(lattice);
  q.mul_ = std::move(mul);
  q.unit_ = *unit;
  return q;
}

Quantale opposite_quantale(const Quantale& q) {
  const std::size_t n = q.size();
  std::vector<Index> mul(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) mul[a * n + b] = q.mul(b, a);
  return check_quantale(q.lattice(), std::move(mul));
}

Quantale meet_quantale(const LatticePtr& lattice) {
  return check_quantale(lattice, lattice->semilattice().meet_table());
}

GradeForms grade_forms(const BoundedLattice& l, const ElementSet& xyr) {
  const FinitePoset& p = l.poset();
  GradeForms f;
  const bool base = xyr.any() && is_directed(p, xyr) && is_lower(p, xyr);
  f.c1 = base;
  f.c2 = base;
  if (base)
    for (Index a = 0; a < l.size() && f.c2; ++a) {
      if (xyr.test(a)) continue;
      bool approximated = true;
      for (Index b = 0; b < l.size() && approximated; ++b)
        if (l.way_below(b, a)) approximated = xyr.test(b);
      if (approximated) f.c2 = false;
    }
  f.c3 = is_lower(p, xyr) && p.greatest(xyr).has_value();
  return f;
}

FuzzyRep check_fuzzy_rep(std::vector<Index> grade, SemilatticePtr source, SemilatticePtr target,
                         LatticePtr lattice) {
  const MeetSemilattice& s1 = *source;
  const MeetSemilattice& s2 = *target;
  const BoundedLattice& l = *lattice;
  const std::size_t n2 = s2.size();
  if (grade.size() != s1.size() * n2)
    throw Error(ErrorKind::DimensionMismatch, "grade table does not match carriers");
  for (Index v : grade)
    if (v >= l.size()) throw Error(ErrorKind::DimensionMismatch, "grade out of range");
  auto g = [&](Index x, Index y) { return grade[x * n2 + y]; };

  for (Index x = 0; x < s1.size(); ++x)
    if (g(x, s2.zero()) != l.one())
      throw Error(ErrorKind::FuzzyRepViolated,
                  "g(" + s1.name(x) + ", " + s2.name(s2.zero()) + ") = " +
                      l.name(g(x, s2.zero())) + " instead of 1",
                  "zero-column", {x, s2.zero()});
  for (Index x = 0; x < s1.size(); ++x)
    for (Index x2 : members(s1.poset().up_set(x)))
      for (Index y = 0; y < n2; ++y)
        if (!l.leq(g(x, y), g(x2, y)))
          throw Error(ErrorKind::FuzzyRepViolated,
                      "g not monotone in the first argument at " + s1.name(x) + " ≤ " +
                          s1.name(x2) + ", " + s2.name(y),
                      "column-upper", {x, x2, y});
  for (Index x = 0; x < s1.size(); ++x)
    for (Index y = 0; y < n2; ++y)
      for (Index y2 : members(s2.poset().down_set(y)))
        if (!l.leq(g(x, y), g(x, y2)))
          throw Error(ErrorKind::FuzzyRepViolated,
                      "g not antitone in the second argument at " + s1.name(x) + ", " +
                          s2.name(y2) + " ≤ " + s2.name(y),
                      "row-lower", {x, y, y2});
  for (Index x = 0; x < s1.size(); ++x)
    for (Index y = 0; y < n2; ++y) {
      GradeForms f = grade_forms(l, l.poset().down_set(g(x, y)));
      if (!(f.c1 && f.c2 && f.c3))
        throw Error(ErrorKind::FuzzyRepViolated, "grade forms disagree", "(c)", {x, y});
    }

  FuzzyRep r;
  r.source_ = std::move(source);
  r.target_ = std::move(target);
  r.lattice_ = std::move(lattice);
  r.grade_ = std::move(grade);
  return r;
}

TernaryRelation to_ternary(const FuzzyRep& r) {
  const std::size_t n1 = r.source()->size(), n2 = r.target()->size(), nl = r.lattice()->size();
  TernaryRelation t(n1 * n2 * nl);
  for (Index x = 0; x < n1; ++x)
    for (Index y = 0; y < n2; ++y)
      for (Index a : members(r.lattice()->poset().down_set(r.grade(x, y))))
        t.set((x * n2 + y) * nl + a);
  return t;
}

FuzzyRep from_ternary(const TernaryRelation& t, const SemilatticePtr& source,
                      const SemilatticePtr& target, const LatticePtr& lattice) {
  const std::size_t n1 = source->size(), n2 = target->size(), nl = lattice->size();
  if (t.size() != n1 * n2 * nl)
    throw Error(ErrorKind::DimensionMismatch, "ternary relation does not match carriers");
  std::vector<Index> grade(n1 * n2);
  for (Index x = 0; x < n1; ++x)
    for (Index y = 0; y < n2; ++y) {
      ElementSet xyr(nl);
      for (Index a = 0; a < nl; ++a)
        if (t.test((x * n2 + y) * nl + a)) xyr.set(a);
      GradeForms f = grade_forms(*lattice, xyr);
      if (f.c1 != f.c2 || f.c2 != f.c3)
        throw Error(ErrorKind::FuzzyRepViolated, "grade forms disagree", "(c)", {x, y});
      if (!f.c3)
        throw Error(ErrorKind::FuzzyRepViolated,
                    "xyR is not a principal lower set at " + source->name(x) + ", " +
                        target->name(y),
                    "(c)", {x, y});
      grade[x * n2 + y] = *lattice->poset().greatest(xyr);
    }
  FuzzyRep r = check_fuzzy_rep(std::move(grade), source, target, lattice);
  if (to_ternary(r) != t)
    throw Error(ErrorKind::FuzzyRepViolated, "relation is not determined by its grades", "(c)");
  return r;
}

bool is_subrep(const FuzzyRep& a, const FuzzyRep& b) {
  if (!same_semilattice(a.source(), b.source()) || !same_semilattice(a.target(), b.target()) ||
      !(*a.lattice() == *b.lattice()))
    return false;
  for (Index i = 0; i < a.grades().size(); ++i)
    if (!a.lattice()->leq(a.grades()[i], b.grades()[i])) return false;
  return true;
}

FuzzyRep embed_crisp(const CrispRep& r, const LatticePtr& lattice) {
  const std::size_t n2 = r.target()->size();
  std::vector<Index> grade(r.source()->size() * n2);
  for (Index x = 0; x < r.source()->size(); ++x)
    for (Index y = 0; y < n2; ++y)
      grade[x * n2 + y] = r.contains(x, y) ? lattice->one() : lattice->zero();
  return check_fuzzy_rep(std::move(grade), r.source(), r.target(), lattice);
}

CrispRep alpha_cut(const FuzzyRep& r, Index alpha) {
  const std::size_t n2 = r.target()->size();
  BoolMatrix table(r.source()->size(), n2);
  for (Index x = 0; x < table.rows(); ++x)
    for (Index y = 0; y < n2; ++y) table.set(x, y, r.contains(x, y, alpha));
  return check_rep(std::move(table), r.source(), r.target());
}

CutFamily to_cuts(const FuzzyRep& r) {
  CutFamily c{r.lattice(), {}};
  for (Index a = 0; a < r.lattice()->size(); ++a) c.cuts.push_back(alpha_cut(r, a));
  return c;
}

FuzzyRep from_cuts(const CutFamily& family) {
  const BoundedLattice& l = *family.lattice;
  if (family.cuts.size() != l.size())
    throw Error(ErrorKind::CutFamilyInvalid, "one cut per lattice element required", "carriers");
  const CrispRep& first = family.cuts.front();
  for (const CrispRep& c : family.cuts)
    if (!same_semilattice(c.source(), first.source()) ||
        !same_semilattice(c.target(), first.target()))
      throw Error(ErrorKind::CutFamilyInvalid, "cuts over different carriers", "carriers");
  const CrispRep& zero_cut = family.cuts[l.zero()];
  if (zero_cut.table().count() != zero_cut.table().rows() * zero_cut.table().cols())
    throw Error(ErrorKind::CutFamilyInvalid, "the 0-cut is not the full relation", "zero-full");
  for (Index a = 0; a < l.size(); ++a)
    for (Index b : members(l.poset().down_set(a)))
      if (!family.cuts[a].table().subset_of(family.cuts[b].table()))
        throw Error(ErrorKind::CutFamilyInvalid,
                    "cut at " + l.name(a) + " not inside cut at " + l.name(b), "antitone", {b, a});

  const std::size_t n1 = first.source()->size(), n2 = first.target()->size();
  std::vector<Index> grade(n1 * n2);
  for (Index x = 0; x < n1; ++x)
    for (Index y = 0; y < n2; ++y) {
      ElementSet xyr(l.size());
      for (Index a = 0; a < l.size(); ++a)
        if (family.cuts[a].contains(x, y)) xyr.set(a);
      auto top = l.poset().greatest(xyr);
      if (!top)
        throw Error(ErrorKind::CutFamilyInvalid,
                    "no greatest level for " + first.source()->name(x) + ", " +
                        first.target()->name(y),
                    "peak", {x, y});
      grade[x * n2 + y] = *top;
    }
  return check_fuzzy_rep(std::move(grade), first.source(), first.target(), family.lattice);
}

namespace {

template <class CrispPinv>
FuzzyRep cutwise_pinv(const FuzzyRep& r, CrispPinv pinv) {
  const BoundedLattice& l = *r.lattice();
  std::vector<CrispRep> inverted;
  inverted.reserve(l.size());
  for (Index b = 0; b < l.size(); ++b) inverted.push_back(pinv(alpha_cut(r, b)));

  const CrispRep& shape = inverted.front();
  CutFamily family{r.lattice(), {}};
  for (Index a = 0; a < l.size(); ++a) {
    // The empty intersection (nothing is way below 0) is the full relation.
    BoolMatrix cut(shape.table().rows(), shape.table().cols(), true);
    for (Index b = 0; b < l.size(); ++b)
      if (l.way_below(b, a))
        for (Index i = 0; i < cut.rows(); ++i) cut.row(i) &= inverted[b].row(i);
    family.cuts.push_back(check_rep(std::move(cut), shape.source(), shape.target()));
  }
  return from_cuts(family);
}

}  // namespace

FuzzyRep fuzzy_pseudo_inverse(const FuzzyRep& r) {
  return cutwise_pinv(r, [](const CrispRep& c) { return pseudo_inverse(c); });
}

FuzzyRep fuzzy_pseudo_inverse(const FuzzyRep& r, const Compatibility& p1,
                              const Compatibility& p2) {
  return cutwise_pinv(r, [&](const CrispRep& c) { return pseudo_inverse(c, p1, p2); });
}

FuzzyRep fuzzy_pseudo_inverse_shortcut(const FuzzyRep& r) {
  const MeetSemilattice& s1 = *r.source();
  const MeetSemilattice& s2 = *r.target();
  const BoundedLattice& l = *r.lattice();
  const std::size_t n1 = s1.size();
  std::vector<Index> grade(s2.size() * n1);
  for (Index t = 0; t < s2.size(); ++t)
    for (Index s = 0; s < n1; ++s)
      grade[t * n1 + s] = s == s1.zero() ? l.one() : t == s2.zero() ? l.zero() : r.grade(s, t);
  return check_fuzzy_rep(std::move(grade), dual_of(r.target()), dual_of(r.source()),
                         r.lattice());
}

FuzzyRep fuzzy_double_pseudo_inverse(const FuzzyRep& r) {
  return fuzzy_pseudo_inverse(fuzzy_pseudo_inverse(r));
}

Verdict is_pseudo_invertible_fuzzy(const FuzzyRep& r) {
  const MeetSemilattice& s1 = *r.source();
  const MeetSemilattice& s2 = *r.target();
  const BoundedLattice& l = *r.lattice();
  for (Index x = 0; x < s1.size(); ++x)
    for (Index y = 0; y < s2.size(); ++y)
      for (Index a : members(l.poset().down_set(r.grade(x, y))))
        for (Index y2 = 0; y2 < s2.size(); ++y2) {
          if (!s2.way_below(y2, y)) continue;
          for (Index a2 = 0; a2 < l.size(); ++a2) {
            if (!l.way_below(a2, a)) continue;
            bool found = false;
            for (Index x2 = 0; x2 < s1.size() && !found; ++x2)
              found = s1.way_below(x2, x) && r.contains(x2, y2, a2);
            if (!found)
              return Verdict::no({x, y, a, y2, a2},
                                 "x=" + s1.name(x) + ", y=" + s2.name(y) + ", α=" + l.name(a) +
                                     ", y'=" + s2.name(y2) + ", α'=" + l.name(a2) +
                                     ": no x' ≪ x with (x', y', α') ∈ R");
          }
        }
  return Verdict::yes();
}

namespace {

void require_composable(const FuzzyRep& r, const FuzzyRep& q, const Quantale& quantale) {
  if (!same_semilattice(r.target(), q.source()))
    throw Error(ErrorKind::MiddleMismatch, "middle semilattices differ");
  if (!(*r.lattice() == *quantale.lattice()) || !(*q.lattice() == *quantale.lattice()))
    throw Error(ErrorKind::QuantaleLatticeMismatch, "grades are not in the quantale's lattice");
}

std::vector<Index> star_product(const FuzzyRep& r, const FuzzyRep& q, const Quantale& quantale) {
  const BoundedLattice& l = *quantale.lattice();
  const auto joins = join_table(l);
  return kernels::quantale_product_parallel(
      r.grades(), q.grades(), r.source()->size(), r.target()->size(), q.target()->size(),
      {l.size(), &joins}, {l.size(), &quantale.mul_table()}, l.zero());
}

}  // namespace

FuzzyRep compose_fuzzy(const FuzzyRep& r, const FuzzyRep& q, const Quantale& quantale) {
  require_composable(r, q, quantale);
  return check_fuzzy_rep(star_product(r, q, quantale), r.source(), q.target(), r.lattice());
}

FuzzyRep compose_fuzzy_closure(const FuzzyRep& r, const FuzzyRep& q, const Quantale& quantale) {
  require_composable(r, q, quantale);
  const BoundedLattice& l = *quantale.lattice();
  const MeetSemilattice& s3 = *q.target();
  const std::size_t n3 = s3.size();
  const std::vector<Index> h = star_product(r, q, quantale);

  std::vector<Index> grade(r.source()->size() * n3);
  for (Index x = 0; x < r.source()->size(); ++x)
    for (Index z = 0; z < n3; ++z) {
      ElementSet levels(l.size());
      for (Index a = 0; a < l.size(); ++a) {
        bool in = true;
        for (Index z2 = 0; z2 < n3 && in; ++z2) {
          if (!s3.way_below(z2, z)) continue;
          for (Index a2 = 0; a2 < l.size() && in; ++a2)
            if (l.way_below(a2, a)) in = l.leq(a2, h[x * n3 + z2]);
        }
        levels.set(a, in);
      }
      auto top = l.poset().greatest(levels);
      if (!top)
        throw Error(ErrorKind::FuzzyRepViolated, "closure has no greatest level", "(c)", {x, z});
      grade[x * n3 + z] = *top;
    }
  return check_fuzzy_rep(std::move(grade), r.source(), q.target(), r.lattice());
}

}  // namespace ambrep
