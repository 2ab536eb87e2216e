#include "ambrep/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

namespace ambrep::oracle {

namespace {

void cap(bool within, const std::string& what) {
  if (!within) throw Error(ErrorKind::SizeCap, what + " exceeds the oracle size cap");
}

ElementSet subset_of_mask(std::size_t n, std::uint64_t mask) {
  ElementSet s(n);
  for (Index i = 0; i < n; ++i)
    if (mask >> i & 1) s.set(i);
  return s;
}

bool directed(const FinitePoset& p, const ElementSet& d) {
  for (Index a : members(d))
    for (Index b : members(d)) {
      bool bound = false;
      for (Index c : members(d)) bound = bound || (p.leq(a, c) && p.leq(b, c));
      if (!bound) return false;
    }
  return true;
}

std::optional<Index> supremum(const FinitePoset& p, const ElementSet& d) {
  std::vector<Index> ubs;
  for (Index u = 0; u < p.size(); ++u) {
    bool ub = true;
    for (Index a : members(d)) ub = ub && p.leq(a, u);
    if (ub) ubs.push_back(u);
  }
  for (Index u : ubs) {
    bool least = true;
    for (Index v : ubs) least = least && p.leq(u, v);
    if (least) return u;
  }
  return std::nullopt;
}

struct DirectedSup {
  ElementSet set;
  Index sup;
};

std::vector<DirectedSup> directed_with_sup(const FinitePoset& p) {
  std::vector<DirectedSup> out;
  const std::size_t n = p.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet d = subset_of_mask(n, mask);
    if (!directed(p, d)) continue;
    if (auto s = supremum(p, d)) out.push_back({std::move(d), *s});
  }
  return out;
}

std::uint64_t fnv(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t fnv(std::uint64_t h, std::size_t v) {
  return fnv(h, std::string_view(reinterpret_cast<const char*>(&v), sizeof v));
}

std::uint64_t hash_semilattice(std::uint64_t h, const MeetSemilattice& s) {
  for (const auto& name : s.poset().names()) h = fnv(fnv(h, name), std::string_view("|"));
  for (Index v : s.meet_table()) h = fnv(h, v);
  return h;
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

constexpr std::uint64_t kOffset = 14695981039346656037ull;

}  // namespace

BoolMatrix wb_oracle(const FinitePoset& p) {
  cap(p.size() <= 12, "poset");
  const auto ds = directed_with_sup(p);
  BoolMatrix wb(p.size(), p.size());
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < p.size(); ++y) {
      bool holds = true;
      for (const auto& d : ds) {
        if (!p.leq(y, d.sup)) continue;
        bool hit = false;
        for (Index e : members(d.set)) hit = hit || p.leq(x, e);
        if (!hit) {
          holds = false;
          break;
        }
      }
      wb.set(x, y, holds);
    }
  return wb;
}

std::vector<ElementSet> dual_oracle(const MeetSemilattice& s) {
  const FinitePoset& p = s.poset();
  const std::size_t n = p.size();
  cap(n <= 12, "semilattice");
  const auto ds = directed_with_sup(p);
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    ElementSet f = subset_of_mask(n, mask);
    bool ok = true;
    for (Index a : members(f))
      for (Index b = 0; b < n && ok; ++b)
        if (p.leq(a, b) && !f.test(b)) ok = false;
    for (Index a : members(f))
      for (Index b : members(f))
        if (ok && !f.test(s.meet(a, b))) ok = false;
    for (const auto& d : ds)
      if (ok && f.test(d.sup) && !d.set.intersects(f)) ok = false;
    if (ok) out.push_back(std::move(f));
  }
  return out;
}

CrispRep pinv_oracle(const CrispRep& r, const Compatibility& p1, const Compatibility& p2) {
  const std::size_t n1 = r.source()->size(), n2 = r.target()->size();
  const std::size_t m1 = p1.right()->size(), m2 = p2.right()->size();
  BoolMatrix table(m2, m1);
  for (Index yh = 0; yh < m2; ++yh)
    for (Index xh = 0; xh < m1; ++xh) {
      bool in = true;
      for (Index x = 0; x < n1 && in; ++x) {
        if (!p1(x, xh)) continue;
        bool some = false;
        for (Index y = 0; y < n2 && !some; ++y) some = r.contains(x, y) && p2(y, yh);
        in = some;
      }
      table.set(yh, xh, in);
    }
  return check_rep(std::move(table), p2.right(), p1.right());
}

CrispRep pinv_oracle(const CrispRep& r) {
  return pinv_oracle(r, canonical_pairing(r.source()), canonical_pairing(r.target()));
}

FuzzyRep fuzzy_pinv_oracle(const FuzzyRep& r, const Compatibility& p1, const Compatibility& p2) {
  const BoundedLattice& l = *r.lattice();
  const std::size_t n1 = r.source()->size(), n2 = r.target()->size();
  const std::size_t m1 = p1.right()->size(), m2 = p2.right()->size();
  std::vector<Index> grade(m2 * m1);
  for (Index yh = 0; yh < m2; ++yh)
    for (Index xh = 0; xh < m1; ++xh) {
      ElementSet levels(l.size());
      for (Index a = 0; a < l.size(); ++a) {
        bool in = true;
        for (Index b = 0; b < l.size() && in; ++b) {
          if (!l.way_below(b, a)) continue;
          for (Index x = 0; x < n1 && in; ++x) {
            if (!p1(x, xh)) continue;
            bool some = false;
            for (Index y = 0; y < n2 && !some; ++y) some = r.contains(x, y, b) && p2(y, yh);
            in = some;
          }
        }
        levels.set(a, in);
      }
      auto top = l.poset().greatest(levels);
      if (!top)
        throw Error(ErrorKind::FuzzyRepViolated, "pseudo-inverse level set has no greatest element",
                    "(c)", {yh, xh});
      grade[yh * m1 + xh] = *top;
    }
  return check_fuzzy_rep(std::move(grade), p2.right(), p1.right(), r.lattice());
}

FuzzyRep fuzzy_pinv_oracle(const FuzzyRep& r) {
  return fuzzy_pinv_oracle(r, canonical_pairing(r.source()), canonical_pairing(r.target()));
}

FuzzyRep compose_expanded(const FuzzyRep& r, const FuzzyRep& q, const Quantale& quantale) {
  const BoundedLattice& l = *quantale.lattice();
  const MeetSemilattice& s2 = *r.target();
  const MeetSemilattice& s3 = *q.target();
  cap(s2.size() * l.size() <= 256, "middle semilattice times lattice");
  const std::size_t n1 = r.source()->size(), n3 = s3.size();

  // reach[x][z'] = every join of finitely many β∗γ with (x,y,β) ∈ R, (y,z',γ) ∈ Q.
  auto reachable = [&](Index x, Index z2) {
    ElementSet products(l.size());
    for (Index y = 0; y < s2.size(); ++y)
      for (Index b = 0; b < l.size(); ++b) {
        if (!r.contains(x, y, b)) continue;
        for (Index c = 0; c < l.size(); ++c)
          if (q.contains(y, z2, c)) products.set(quantale.mul(b, c));
      }
    ElementSet joins = products;
    for (bool grew = true; grew;) {
      grew = false;
      for (Index a : members(joins))
        for (Index b : members(products))
          if (!joins.test(l.join(a, b))) {
            joins.set(l.join(a, b));
            grew = true;
          }
    }
    return joins;
  };

  std::vector<Index> grade(n1 * n3);
  for (Index x = 0; x < n1; ++x) {
    std::vector<ElementSet> reach(n3);
    for (Index z2 = 0; z2 < n3; ++z2) reach[z2] = reachable(x, z2);
    for (Index z = 0; z < n3; ++z) {
      ElementSet levels(l.size());
      for (Index a = 0; a < l.size(); ++a) {
        bool in = true;
        for (Index z2 = 0; z2 < n3 && in; ++z2) {
          if (!s3.way_below(z2, z)) continue;
          for (Index a2 = 0; a2 < l.size() && in; ++a2) {
            if (!l.way_below(a2, a)) continue;
            bool covered = false;
            for (Index j : members(reach[z2])) covered = covered || l.leq(a2, j);
            in = covered;
          }
        }
        levels.set(a, in);
      }
      auto top = l.poset().greatest(levels);
      if (!top)
        throw Error(ErrorKind::FuzzyRepViolated, "composite level set has no greatest element",
                    "(c)", {x, z});
      grade[x * n3 + z] = *top;
    }
  }
  return check_fuzzy_rep(std::move(grade), r.source(), q.target(), r.lattice());
}

namespace {

bool literal_compatibility(const MeetSemilattice& s, const MeetSemilattice& t,
                           const BoolMatrix& m) {
  for (Index y = 0; y < t.size(); ++y)
    if (m.test(s.zero(), y)) return false;
  for (Index x = 0; x < s.size(); ++x)
    if (m.test(x, t.zero())) return false;
  for (Index a = 0; a < s.size(); ++a)
    for (Index b = 0; b < s.size(); ++b)
      for (Index y = 0; y < t.size(); ++y)
        if (m.test(s.meet(a, b), y) != (m.test(a, y) && m.test(b, y))) return false;
  for (Index x = 0; x < s.size(); ++x)
    for (Index a = 0; a < t.size(); ++a)
      for (Index b = 0; b < t.size(); ++b)
        if (m.test(x, t.meet(a, b)) != (m.test(x, a) && m.test(x, b))) return false;
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < t.size(); ++y)
      for (Index x2 = 0; x2 < s.size(); ++x2)
        for (Index y2 = 0; y2 < t.size(); ++y2)
          if (m.test(x, y) && s.leq(x, x2) && t.leq(y, y2) && !m.test(x2, y2)) return false;
  return true;
}

bool literal_separating(const BoolMatrix& m) {
  std::set<std::vector<bool>> rows, cols;
  for (Index x = 0; x < m.rows(); ++x) {
    std::vector<bool> r;
    for (Index y = 0; y < m.cols(); ++y) r.push_back(m.test(x, y));
    if (!rows.insert(r).second) return false;
  }
  for (Index y = 0; y < m.cols(); ++y) {
    std::vector<bool> c;
    for (Index x = 0; x < m.rows(); ++x) c.push_back(m.test(x, y));
    if (!cols.insert(c).second) return false;
  }
  return true;
}

}  // namespace

std::vector<Compatibility> search_separating(const SemilatticePtr& s, const SemilatticePtr& t) {
  const std::size_t n = s->size(), m = t->size();
  cap(n * m <= 16, "table");
  std::vector<Compatibility> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * m)); ++mask) {
    BoolMatrix table(n, m);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < m; ++y) table.set(x, y, mask >> (x * m + y) & 1);
    if (literal_compatibility(*s, *t, table) && literal_separating(table))
      out.push_back(check_compatibility(std::move(table), s, t));
  }
  return out;
}

std::size_t count_isomorphisms(const MeetSemilattice& s, const MeetSemilattice& t) {
  if (s.size() != t.size()) return 0;
  cap(s.size() <= 8, "semilattice");
  std::vector<Index> perm(s.size());
  std::iota(perm.begin(), perm.end(), Index{0});
  std::size_t count = 0;
  do {
    bool iso = true;
    for (Index a = 0; a < s.size() && iso; ++a)
      for (Index b = 0; b < s.size() && iso; ++b) iso = s.leq(a, b) == t.leq(perm[a], perm[b]);
    if (iso) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

CutsLemmaResult cuts_lemma_check(const ElementSet& rel, const FinitePoset& p1,
                                 const FinitePoset& p2, const FinitePoset& p3) {
  const std::size_t n1 = p1.size(), n2 = p2.size(), n3 = p3.size();
  auto at = [&](Index a, Index b, Index c) { return rel.test((a * n2 + b) * n3 + c); };
  CutsLemmaResult res;

  for (Index a = 0; a < n1 && res.relation_lower; ++a)
    for (Index b = 0; b < n2 && res.relation_lower; ++b)
      for (Index c = 0; c < n3 && res.relation_lower; ++c) {
        if (!at(a, b, c)) continue;
        for (Index a2 = 0; a2 < n1 && res.relation_lower; ++a2)
          for (Index b2 = 0; b2 < n2 && res.relation_lower; ++b2)
            for (Index c2 = 0; c2 < n3 && res.relation_lower; ++c2)
              if (p1.leq(a2, a) && p2.leq(b2, b) && p3.leq(c2, c) && !at(a2, b2, c2)) {
                res.relation_lower = false;
                res.witness = {a, b, c, a2, b2, c2};
              }
      }

  for (Index a = 0; a < n1 && res.cuts_lower; ++a)
    for (Index b = 0; b < n2 && res.cuts_lower; ++b)
      for (Index c = 0; c < n3 && res.cuts_lower; ++c) {
        if (!at(a, b, c)) continue;
        for (Index a2 = 0; a2 < n1; ++a2)
          if (p1.leq(a2, a) && !at(a2, b, c)) res.cuts_lower = false;
        for (Index b2 = 0; b2 < n2; ++b2)
          if (p2.leq(b2, b) && !at(a, b2, c)) res.cuts_lower = false;
        for (Index c2 = 0; c2 < n3; ++c2)
          if (p3.leq(c2, c) && !at(a, b, c2)) res.cuts_lower = false;
      }
  return res;
}

Verdict cd_oracle(const BoundedLattice& l) {
  const std::size_t n = l.size();
  cap(n <= 4, "lattice");
  const std::size_t subsets = std::size_t{1} << n;
  auto join_all = [&](const ElementSet& a) {
    Index j = l.zero();
    for (Index x : members(a)) j = l.join(j, x);
    return j;
  };
  std::vector<Index> sup(subsets);
  for (std::uint64_t m = 0; m < subsets; ++m) sup[m] = join_all(subset_of_mask(n, m));

  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    Index lhs = l.one();
    ElementSet choices(n);
    choices.set(l.one());  // meets over the empty choice
    for (std::uint64_t m = 0; m < subsets; ++m) {
      if (!(family >> m & 1)) continue;
      lhs = l.meet(lhs, sup[m]);
      ElementSet next(n);
      for (Index c : members(choices))
        for (Index a = 0; a < n; ++a)
          if (m >> a & 1) next.set(l.meet(c, a));
      choices = std::move(next);
    }
    const Index rhs = join_all(choices);
    if (lhs != rhs)
      return Verdict::no({static_cast<Index>(family)},
                         "family " + std::to_string(family) + ": meet of joins " + l.name(lhs) +
                             " vs join of meets " + l.name(rhs));
  }
  return Verdict::yes();
}

OracleReport check_way_below(const FinitePoset& p) {
  std::uint64_t h = kOffset;
  for (const auto& name : p.names()) h = fnv(fnv(h, name), std::string_view("|"));
  for (Index x = 0; x < p.size(); ++x)
    for (Index y : members(p.up_set(x))) h = fnv(fnv(h, x), y);
  OracleReport rep{"way_below", hex(h), true, {}};
  const BoolMatrix expected = wb_oracle(p);
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < p.size(); ++y)
      if (expected.test(x, y) != p.way_below(x, y)) {
        rep.agree = false;
        rep.witness = "(" + p.name(x) + ", " + p.name(y) + "): oracle " +
                      (expected.test(x, y) ? "true" : "false");
        return rep;
      }
  return rep;
}

OracleReport check_lawson_dual(const SemilatticePtr& s) {
  OracleReport rep{"lawson_dual", digest(*s), true, {}};
  const DualSemilattice d = lawson_dual(s);
  auto key = [](const ElementSet& e) {
    std::string k;
    boost::to_string(e, k);
    return k;
  };
  std::set<std::string> expected, actual;
  for (const auto& f : dual_oracle(*s)) expected.insert(key(f));
  for (Index i = 0; i < d.size(); ++i) actual.insert(key(d.filter(i)));
  if (expected != actual) {
    rep.agree = false;
    rep.witness = "filter sets differ: oracle " + std::to_string(expected.size()) +
                  ", production " + std::to_string(actual.size());
    return rep;
  }
  const MeetSemilattice& ds = *d.semilattice();
  for (Index i = 0; i < d.size(); ++i)
    for (Index j = 0; j < d.size(); ++j)
      if (ds.leq(i, j) != d.filter(i).is_subset_of(d.filter(j))) {
        rep.agree = false;
        rep.witness = "order is not inclusion at " + ds.name(i) + ", " + ds.name(j);
        return rep;
      }
  return rep;
}

OracleReport check_pseudo_inverse(const CrispRep& r) {
  OracleReport rep{"pseudo_inverse", digest(r), true, {}};
  const Compatibility p1 = canonical_pairing(r.source());
  const Compatibility p2 = canonical_pairing(r.target());
  const CrispRep fast = pseudo_inverse(r);
  const CrispRep via = to_canonical_duals(pseudo_inverse(r, p1, p2), p1, p2);
  const CrispRep lit = pinv_oracle(r, p1, p2);
  if (!(fast == lit)) {
    rep.agree = false;
    rep.witness = "transpose path differs from the defining formula";
  } else if (!(via == lit)) {
    rep.agree = false;
    rep.witness = "transversal path differs from the defining formula";
  }
  return rep;
}

OracleReport check_fuzzy_pseudo_inverse(const FuzzyRep& r) {
  OracleReport rep{"fuzzy_pseudo_inverse", digest(r), true, {}};
  const FuzzyRep cut = fuzzy_pseudo_inverse(r);
  const FuzzyRep lit = fuzzy_pinv_oracle(r);
  if (!(cut == lit)) {
    rep.agree = false;
    rep.witness = "cutwise path differs from the defining formula";
  } else if (!(fuzzy_pseudo_inverse_shortcut(r) == lit)) {
    rep.agree = false;
    rep.witness = "grade shortcut differs from the defining formula";
  }
  return rep;
}

OracleReport check_compose_fuzzy(const FuzzyRep& r, const FuzzyRep& q, const Quantale& quantale) {
  OracleReport rep{"compose_fuzzy",
                   hex(fnv(std::stoull(digest(r), nullptr, 16), digest(q))), true, {}};
  const FuzzyRep fast = compose_fuzzy(r, q, quantale);
  const FuzzyRep lit = compose_expanded(r, q, quantale);
  if (!(fast == lit)) {
    rep.agree = false;
    rep.witness = "matrix product differs from the witness form";
  } else if (!(compose_fuzzy_closure(r, q, quantale) == lit)) {
    rep.agree = false;
    rep.witness = "closure route differs from the witness form";
  }
  return rep;
}

std::string digest(const MeetSemilattice& s) { return hex(hash_semilattice(kOffset, s)); }

std::string digest(const CrispRep& r) {
  std::uint64_t h = hash_semilattice(hash_semilattice(kOffset, *r.source()), *r.target());
  for (Index x = 0; x < r.table().rows(); ++x)
    for (Index y : members(r.row(x))) h = fnv(fnv(h, x), y);
  return hex(h);
}

std::string digest(const FuzzyRep& r) {
  std::uint64_t h = hash_semilattice(hash_semilattice(kOffset, *r.source()), *r.target());
  h = hash_semilattice(h, r.lattice()->semilattice());
  for (Index g : r.grades()) h = fnv(h, g);
  return hex(h);
}

}  // namespace ambrep::oracle
