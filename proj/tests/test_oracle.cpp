#include <doctest.h>

#include "support.hpp"

#include "ambrep/generate.hpp"
#include "ambrep/oracle.hpp"

using namespace testing;

TEST_CASE("way-below scan") {
  const FinitePoset c = catalog::chain(3);
  const BoolMatrix wb = oracle::wb_oracle(c);
  CHECK(wb == way_below(c));
  CHECK(wb.count() == 5);
  const FinitePoset w = poset({"0", "a", "b", "c"}, {{"0", "a"}, {"0", "b"}, {"0", "c"}});
  const BoolMatrix ww = oracle::wb_oracle(w);
  for (Index x = 0; x < 4; ++x) {
    CHECK_FALSE(ww.test(x, 0));
    for (Index y = 0; y < 4; ++y) CHECK(ww.test(x, y) == (w.leq(x, y) && y != 0));
  }
  CHECK(oracle::check_way_below(catalog::boolean8()).agree);
  CHECK_THROWS_AS(oracle::wb_oracle(catalog::chain(13)), Error);
}

TEST_CASE("filter enumeration") {
  const SemilatticePtr d = d4();
  const auto filters = oracle::dual_oracle(*d);
  CHECK(filters.size() == 4);
  for (const auto& f : filters)
    if (f.any()) CHECK(d->poset().least(f));
  for (const auto& [name, s] : catalog::semilattices()) CHECK(oracle::dual_oracle(*s).size() == s->size());
}

TEST_CASE("pseudo-inverse by definition") {
  const SemilatticePtr c = c2();
  CHECK(oracle::pinv_oracle(full_rep(c, c)) == identity_rep(dual_of(c)));
  CHECK(oracle::pinv_oracle(identity_rep(d4())) == identity_rep(dual_of(d4())));
  const SemilatticeMorphism f(c, c3(), {c->zero(), ix(c3(), "m")});
  CHECK(oracle::pinv_oracle(embed_morphism(f)) == embed_morphism(dual_map(f)));
  for (std::uint64_t i = 0; i < 30; ++i) {
    CaseRng rng(2, i);
    const SemilatticePtr a = generate_semilattice(rng, 6), b = generate_semilattice(rng, 6);
    const CrispRep r = generate_crisp_rep(rng, a, b, 0.3);
    const auto report = oracle::check_pseudo_inverse(r);
    CHECK(report.agree);
    CHECK(report.digest == oracle::digest(r));
  }
}

TEST_CASE("expanded composition") {
  const LatticePtr l = make_lattice(catalog::chain(3));
  const Quantale meet = meet_quantale(l);
  const SemilatticePtr c = c2();
  const Index m = ix(l->poset(), "m");
  const FuzzyRep r = check_fuzzy_rep({l->one(), l->zero(), l->one(), m}, c, c, l);
  const FuzzyRep full = embed_crisp(full_rep(c, c), l);
  CHECK(oracle::compose_expanded(r, r, meet) == compose_fuzzy(r, r, meet));
  CHECK(oracle::compose_expanded(r, full, meet) == compose_fuzzy(r, full, meet));
  CHECK(oracle::compose_expanded(r, r, meet).grade(1, 1) == m);

  const SemilatticePtr d = d4();
  const CrispRep e = identity_rep(d), f = full_rep(d, d);
  CHECK(oracle::compose_expanded(embed_crisp(e, l), embed_crisp(f, l), meet) ==
        embed_crisp(compose(e, f), l));

  const Quantale rel2 = catalog::rel2();
  const LatticePtr rl = rel2.lattice();
  const FuzzyRep a = check_fuzzy_rep({rl->one(), rl->zero(), rl->one(), 0b0010}, c, c, rl);
  const FuzzyRep b = check_fuzzy_rep({rl->one(), rl->zero(), rl->one(), 0b0100}, c, c, rl);
  CHECK(oracle::compose_expanded(a, b, rel2).grade(1, 1) == 0b0001);
  CHECK(oracle::compose_expanded(b, a, rel2).grade(1, 1) == 0b1000);
  CHECK(oracle::check_compose_fuzzy(a, b, rel2).agree);
}

TEST_CASE("separating search") {
  CHECK(oracle::search_separating(c2(), c2()).size() == 1);
  CHECK(oracle::search_separating(c2(), d4()).empty());
  CHECK(oracle::count_isomorphisms(*c2(), *dual_of(d4())) == 0);
  CHECK(oracle::count_isomorphisms(*d4(), *d4()) == 2);
}

TEST_CASE("cut lemma scan") {
  const FinitePoset a = catalog::chain(2), b = catalog::vee(), c = catalog::chain(2);
  const std::size_t n = a.size() * b.size() * c.size();
  auto r = oracle::cuts_lemma_check(ElementSet(n), a, b, c);
  CHECK(r.relation_lower);
  CHECK(r.cuts_lower);

  for (std::uint64_t i = 0; i < 30; ++i) {
    CaseRng rng(8, i);
    const ElementSet seeds = generate_subset(rng, n, 0.2);
    ElementSet lower(n);
    for (Index k : members(seeds)) {
      const Index x = k / 6, y = k / 2 % 3, z = k % 2;
      for (Index x2 : members(a.down_set(x)))
        for (Index y2 : members(b.down_set(y)))
          for (Index z2 : members(c.down_set(z))) lower.set((x2 * 3 + y2) * 2 + z2);
    }
    r = oracle::cuts_lemma_check(lower, a, b, c);
    CHECK(r.relation_lower);
    CHECK(r.cuts_lower);
    // Drop a minimal-looking member that has something above it.
    if (lower.test(0) && lower.count() > 1) {
      ElementSet broken = lower;
      broken.reset(0);
      r = oracle::cuts_lemma_check(broken, a, b, c);
      CHECK_FALSE(r.relation_lower);
      CHECK_FALSE(r.cuts_lower);
    }
  }
}

TEST_CASE("digests") {
  CHECK(oracle::digest(*d4()) == oracle::digest(*d4()));
  CHECK(oracle::digest(*d4()) != oracle::digest(*c3()));
  CHECK(oracle::digest(identity_rep(c2())) != oracle::digest(full_rep(c2(), c2())));
}
