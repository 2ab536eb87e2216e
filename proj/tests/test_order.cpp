#include <doctest.h>

#include "support.hpp"

#include "ambrep/generate.hpp"
#include "ambrep/oracle.hpp"

using namespace testing;

namespace {

// x ≪ y iff every directed D (∅ included) with sup D ≥ y contains some
// d ≥ x. Subsets enumerated by mask.
bool way_below_by_subsets(const FinitePoset& p, Index x, Index y) {
  const std::size_t n = p.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    ElementSet d(n);
    for (Index i = 0; i < n; ++i)
      if (mask >> i & 1) d.set(i);
    if (!is_directed(p, d)) continue;
    // sup: least upper bound of d, if any
    ElementSet ub = p.full_set();
    for (Index i : members(d)) ub &= p.up_set(i);
    const auto sup = p.least(ub);
    if (!sup || !p.leq(y, *sup)) continue;
    bool hit = false;
    for (Index i : members(d)) hit = hit || p.leq(x, i);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("posets from generating pairs") {
  const FinitePoset p = poset({"0", "1"}, {{"0", "1"}});
  CHECK(p.leq(0, 1));
  CHECK_FALSE(p.leq(1, 0));
  CHECK(make_semilattice(p)->size() == 2);

  const FinitePoset d = poset({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  CHECK(make_semilattice(d)->meet(ix(d, "a"), ix(d, "b")) == ix(d, "0"));
  CHECK(d.leq(ix(d, "0"), ix(d, "1")));

  try {
    poset({"x", "y"}, {{"x", "y"}, {"y", "x"}});
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CycleDetected);
  }
}

TEST_CASE("meet structure") {
  const SemilatticePtr v = v3();
  CHECK(v->meet(ix(v, "a"), ix(v, "b")) == ix(v, "0"));
  CHECK_FALSE(v->poset().top());

  const FinitePoset bowtie =
      poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  CHECK_FALSE(glb(bowtie, ix(bowtie, "c"), ix(bowtie, "d")));
  try {
    meet_structure(bowtie);
    FAIL("bowtie accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoMeet);
  }
  CHECK_FALSE(bowtie.bottom());
}

TEST_CASE("way-below on C3 against the subset scan") {
  const FinitePoset p = catalog::chain(3);
  std::vector<std::pair<std::string, std::string>> found;
  for (Index x = 0; x < 3; ++x)
    for (Index y = 0; y < 3; ++y) {
      CHECK(p.way_below(x, y) == way_below_by_subsets(p, x, y));
      if (p.way_below(x, y)) found.emplace_back(p.name(x), p.name(y));
    }
  const NamePairs expected = {{"0", "m"}, {"0", "1"}, {"m", "m"}, {"m", "1"}, {"1", "1"}};
  CHECK(found.size() == expected.size());
  for (const auto& e : expected) CHECK(p.way_below(ix(p, e.first), ix(p, e.second)));
  CHECK_FALSE(p.way_below(0, 0));
}

TEST_CASE("way-below across the gallery and a wide antichain") {
  std::vector<FinitePoset> posets;
  for (const auto& [name, l] : catalog::gallery()) posets.push_back(l->poset());
  posets.push_back(catalog::vee());
  posets.push_back(poset({"0", "a", "b", "c"}, {{"0", "a"}, {"0", "b"}, {"0", "c"}}));
  for (const FinitePoset& p : posets) {
    for (Index x = 0; x < p.size(); ++x) {
      CHECK_FALSE(p.way_below(x, *p.bottom()));
      for (Index y = 0; y < p.size(); ++y) {
        CHECK(p.way_below(x, y) == way_below_by_subsets(p, x, y));
        CHECK(p.way_below(x, y) == (p.leq(x, y) && y != *p.bottom()));
      }
    }
    CHECK(oracle::wb_oracle(p) == p.way_below_table());
  }
  const FinitePoset d = catalog::diamond();
  CHECK(d.way_below(ix(d, "a"), ix(d, "a")));
}

TEST_CASE("Scott closure") {
  const FinitePoset c = catalog::chain(3);
  CHECK(scott_closure(c, named(c, {"m"})) == named(c, {"0", "m"}));
  const FinitePoset d = catalog::diamond();
  CHECK(scott_closure(d, named(d, {"a", "b"})) == named(d, {"0", "a", "b"}));
  // The bottom is the supremum of the empty directed set.
  CHECK(scott_closure(d, d.empty_set()) == named(d, {"0"}));
  CHECK(scott_closure(c, c.empty_set()) == named(c, {"0"}));
  CHECK(is_lower(d, d.empty_set()));
}

TEST_CASE("filters and directedness") {
  const SemilatticePtr d = d4();
  const FinitePoset& p = d->poset();
  CHECK_FALSE(is_filter(*d, named(p, {"a", "b", "1"})));
  CHECK(is_filter(*d, p.empty_set()));
  CHECK(is_directed(p, p.empty_set()));
  CHECK(is_filtered(p, p.empty_set()));
  const SemilatticePtr c = c3();
  CHECK(is_filter(*c, named(c->poset(), {"m", "1"})));
  CHECK_FALSE(is_directed(p, named(p, {"a", "b"})));
  CHECK(is_directed(p, named(p, {"a", "b", "1"})));
}

TEST_CASE("distributivity") {
  for (const auto& [name, l] : catalog::gallery()) {
    const bool expected = name != "M3";
    CHECK_MESSAGE(static_cast<bool>(check_distributive(*l)) == expected, name);
    if (l->size() <= 4) CHECK(static_cast<bool>(oracle::cd_oracle(*l)) == expected);
  }
  const Verdict m3 = check_distributive(*make_lattice(catalog::m3()));
  CHECK(m3.witness.size() == 3);
}

TEST_CASE("opposite and product") {
  const FinitePoset c = catalog::chain(3);
  CHECK(find_isomorphism(opposite(c), c));
  CHECK(opposite(opposite(c)) == c);
  const FinitePoset d = catalog::diamond();
  CHECK(opposite(opposite(d)) == d);
  const FinitePoset c2p = catalog::chain(2);
  CHECK(find_isomorphism(product(c2p, c2p), d));
  CHECK_FALSE(find_isomorphism(product(c2p, c2p), catalog::chain(4)));
}

TEST_CASE("way-below laws on generated posets") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    CaseRng rng(11, i);
    const SemilatticePtr s = generate_semilattice(rng, 8);
    const FinitePoset& p = s->poset();
    CHECK(way_below(p) == p.way_below_table());
    for (Index a = 0; a < p.size(); ++a)
      for (Index b = 0; b < p.size(); ++b) {
        if (!p.way_below(a, b)) continue;
        CHECK(p.leq(a, b));
        bool interpolated = false;
        for (Index m = 0; m < p.size(); ++m)
          interpolated = interpolated || (p.way_below(a, m) && p.way_below(m, b));
        CHECK(interpolated);
      }
  }
}

TEST_CASE("cuts of ternary relations") {
  const FinitePoset a = catalog::chain(2);
  const FinitePoset b = catalog::chain(2);
  const FinitePoset c = catalog::chain(3);
  const std::size_t n = 2 * 2 * 3;
  auto bit = [](Index x, Index y, Index z) { return (x * 2 + y) * 3 + z; };
  CHECK(oracle::cuts_lemma_check(ElementSet(n), a, b, c).relation_lower);

  // The lower set below (1,1,m).
  ElementSet lower(n);
  for (Index x = 0; x < 2; ++x)
    for (Index y = 0; y < 2; ++y)
      for (Index z = 0; z < 2; ++z) lower.set(bit(x, y, z));
  auto r = oracle::cuts_lemma_check(lower, a, b, c);
  CHECK(r.relation_lower);
  CHECK(r.cuts_lower);

  ElementSet broken = lower;
  broken.reset(bit(0, 0, 0));
  r = oracle::cuts_lemma_check(broken, a, b, c);
  CHECK_FALSE(r.relation_lower);
  CHECK_FALSE(r.cuts_lower);
  CHECK_FALSE(r.witness.empty());
}
