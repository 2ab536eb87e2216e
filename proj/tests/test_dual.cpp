#include <doctest.h>

#include <set>

#include "support.hpp"

#include "ambrep/generate.hpp"
#include "ambrep/oracle.hpp"

using namespace testing;

namespace {

// Proper filters (∅ included) by scanning every subset.
std::vector<ElementSet> filters_by_scan(const MeetSemilattice& s) {
  std::vector<ElementSet> out;
  const std::size_t n = s.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    ElementSet f(n);
    for (Index i = 0; i < n; ++i)
      if (mask >> i & 1) f.set(i);
    if (f.test(s.zero())) continue;
    bool ok = true;
    for (Index a : members(f)) {
      ok = ok && s.poset().up_set(a).is_subset_of(f);
      for (Index b : members(f)) ok = ok && f.test(s.meet(a, b));
    }
    if (ok) out.push_back(f);
  }
  return out;
}

SemilatticeMorphism map_of(const SemilatticePtr& a, const SemilatticePtr& b,
                           const std::vector<std::pair<std::string, std::string>>& entries) {
  std::vector<Index> t(a->size(), b->zero());
  for (const auto& [x, y] : entries) t[ix(a, x)] = ix(b, y);
  return SemilatticeMorphism(a, b, t);
}

}  // namespace

TEST_CASE("dual of the diamond has no top") {
  const SemilatticePtr d = d4();
  const DualSemilattice dual = lawson_dual(d);
  const FinitePoset& p = d->poset();
  std::set<std::vector<Index>> got;
  for (Index i = 0; i < dual.size(); ++i) got.insert(members(dual.filter(i)));
  const std::set<std::vector<Index>> expected = {
      members(p.empty_set()), members(named(p, {"1"})), members(named(p, {"a", "1"})),
      members(named(p, {"b", "1"}))};
  CHECK(got == expected);

  const FinitePoset& q = dual.semilattice()->poset();
  CHECK_FALSE(q.top());
  const Index e = *dual.find(p.empty_set());
  const Index one = *dual.find(named(p, {"1"}));
  CHECK(q.less(e, one));
  CHECK(q.less(one, *dual.find(named(p, {"a", "1"}))));
  CHECK(q.less(one, *dual.find(named(p, {"b", "1"}))));
}

TEST_CASE("small duals") {
  const SemilatticePtr v = v3();
  CHECK(find_isomorphism(dual_of(v)->poset(), v->poset()));
  const SemilatticePtr c = c2();
  CHECK(find_isomorphism(dual_of(c)->poset(), c->poset()));
  const SemilatticePtr c3s = c3();
  const DualSemilattice d3 = lawson_dual(c3s);
  CHECK(d3.filter(d3.filter_of(ix(c3s, "m"))) == named(c3s->poset(), {"m", "1"}));
  CHECK(d3.element_of(d3.semilattice()->zero()) == c3s->zero());
  CHECK(dual_name("m") == "^m");
  CHECK(dual_name("^m") == "m");
}

TEST_CASE("dual agrees with the filter scan") {
  std::vector<SemilatticePtr> all;
  for (const auto& n : catalog::semilattices()) all.push_back(n.semilattice);
  for (std::uint64_t i = 0; i < 40; ++i) {
    CaseRng rng(5, i);
    all.push_back(generate_semilattice(rng, 8));
  }
  for (const auto& s : all) {
    const DualSemilattice d = lawson_dual(s);
    const auto scanned = filters_by_scan(*s);
    CHECK(scanned.size() == s->size());
    CHECK(d.size() == scanned.size());
    for (const auto& f : scanned) {
      const auto i = d.find(f);
      REQUIRE(i);
      if (f.any()) CHECK(s->poset().least(f) == d.generator(*i));
    }
    for (Index i = 0; i < d.size(); ++i)
      for (Index j = 0; j < d.size(); ++j)
        CHECK(d.semilattice()->leq(i, j) == d.filter(i).is_subset_of(d.filter(j)));
    CHECK(oracle::dual_oracle(*s).size() == s->size());
    CHECK(oracle::check_lawson_dual(s).agree);
    CHECK(same_semilattice(dual_of(dual_of(s)), s));
  }
}

TEST_CASE("dual maps") {
  const SemilatticePtr a = c2(), b = c3();
  const SemilatticeMorphism f = map_of(a, b, {{"1", "m"}});
  const SemilatticeMorphism fd = dual_map(f);
  CHECK(fd(up(b, "0")) == up(a, "0"));
  CHECK(fd(up(b, "1")) == up(a, "0"));
  CHECK(fd(up(b, "m")) == up(a, "1"));

  CHECK(dual_map(identity_morphism(b)) == identity_morphism(dual_of(b)));
  const SemilatticeMorphism z = dual_map(constant_zero(a, b));
  for (Index i : z.table()) CHECK(i == z.target()->zero());

  const SemilatticeMorphism g = map_of(b, a, {{"1", "1"}});
  CHECK(dual_map(then(f, g)) == then(dual_map(g), dual_map(f)));

  try {
    map_of(c3(), c2(), {{"m", "1"}});  // 1 ↦ 0 breaks monotonicity
    FAIL("not a morphism");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMorphism);
  }
}

TEST_CASE("canonical isomorphism") {
  const SemilatticePtr d = d4();
  const SemilatticeMorphism u = canonical_iso(d);
  CHECK(is_order_iso(u));
  CHECK(find_isomorphism(u.target()->poset(), d->poset()));
  CHECK(u(d->zero()) == u.target()->zero());

  // u(m) = {F | m ∈ F} is the double-dual element generated by ↑m.
  const SemilatticePtr c = c3();
  const SemilatticeMorphism uc = canonical_iso(c);
  const DualSemilattice dd = lawson_dual(dual_of(c));
  const ElementSet& members_of_um = dd.filter(uc(ix(c, "m")));
  const DualSemilattice d1 = lawson_dual(c);
  for (Index f = 0; f < d1.size(); ++f)
    CHECK(members_of_um.test(f) == d1.filter(f).test(ix(c, "m")));

  for (std::uint64_t i = 0; i < 30; ++i) {
    CaseRng rng(9, i);
    const SemilatticePtr s1 = generate_semilattice(rng, 7);
    const SemilatticePtr s2 = generate_semilattice(rng, 7);
    const SemilatticeMorphism f = generate_morphism(rng, s1, s2);
    CHECK(then(f, canonical_iso(s2)) == then(canonical_iso(s1), dual_map(dual_map(f))));
  }
}
