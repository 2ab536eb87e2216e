#include <doctest.h>

#include "support.hpp"

#include "ambrep/demos.hpp"
#include "ambrep/generate.hpp"
#include "ambrep/kernels.hpp"
#include "ambrep/oracle.hpp"

using namespace testing;

namespace {

// ŷR^♯ = {x ∈ S1 | ŷ ∩ xR = ∅}^⊥ over the canonical pairings, evaluated
// with filters as plain sets.
CrispRep pinv_by_filters(const CrispRep& r) {
  const DualSemilattice d1 = lawson_dual(r.source());
  const DualSemilattice d2 = lawson_dual(r.target());
  BoolMatrix t(d2.size(), d1.size());
  for (Index g = 0; g < d2.size(); ++g) {
    ElementSet a(r.source()->size());
    for (Index x = 0; x < a.size(); ++x)
      if (!d2.filter(g).intersects(r.row(x))) a.set(x);
    for (Index f = 0; f < d1.size(); ++f) t.set(g, f, !d1.filter(f).intersects(a));
  }
  return check_rep(t, d2.semilattice(), d1.semilattice());
}

CrispRep trim_zero_row(const CrispRep& r) {
  BoolMatrix t = r.table();
  t.row(r.source()->zero()).reset();
  t.set(r.source()->zero(), r.target()->zero());
  return check_rep(t, r.source(), r.target());
}

SemilatticeMorphism c2_to_c3() {
  const SemilatticePtr a = c2(), b = c3();
  return SemilatticeMorphism(a, b, {a->zero(), ix(b, "m")});
}

}  // namespace

TEST_CASE("validation") {
  const SemilatticePtr c = c2();
  CHECK_NOTHROW(rep(c, c, {{"0", "0"}, {"1", "0"}, {"1", "1"}}));
  try {
    rep(c, c, {{"0", "0"}, {"1", "1"}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RepViolated);
    CHECK(e.clause() == "row-lower");
  }
  CHECK_NOTHROW(full_rep(d4(), v3()));
  CHECK(identity_rep(c) == rep(c, c, {{"0", "0"}, {"1", "0"}, {"1", "1"}}));
  CHECK(identity_rep(d4()).table().count() == 9);
}

TEST_CASE("morphisms embed as representations") {
  const SemilatticeMorphism f = c2_to_c3();
  const SemilatticePtr a = f.source(), b = f.target();
  CHECK(embed_morphism(f) == rep(a, b, {{"0", "0"}, {"1", "0"}, {"1", "m"}}));
  CHECK(embed_morphism(identity_morphism(b)) == identity_rep(b));
  CHECK(embed_morphism(constant_zero(a, b)) == rep(a, b, {{"0", "0"}, {"1", "0"}}));
  CHECK(rep_to_morphism(embed_morphism(f)) == f);
  CHECK(rep_to_morphism(identity_rep(d4())) == identity_morphism(d4()));

  const SemilatticeMorphism g(b, a, {a->zero(), a->zero(), ix(a, "1")});
  CHECK(compose(embed_morphism(f), embed_morphism(g)) == rep(a, a, {{"0", "0"}, {"1", "0"}}));
  CHECK(compose(embed_morphism(f), embed_morphism(g)) == embed_morphism(then(f, g)));

  const SemilatticePtr v = v3();
  const CrispRep wide = rep(a, v, {{"0", "0"}, {"1", "0"}, {"1", "a"}, {"1", "b"}});
  try {
    rep_to_morphism(wide);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFunctional);
  }
}

TEST_CASE("composition") {
  const SemilatticePtr c = c3(), d = d4();
  const CrispRep full = full_rep(c, d);
  CHECK(compose(full, full_rep(d, c)) == full_rep(c, c));
  for (std::uint64_t i = 0; i < 40; ++i) {
    CaseRng rng(3, i);
    const SemilatticePtr s1 = generate_semilattice(rng, 6), s2 = generate_semilattice(rng, 6);
    const SemilatticePtr s3 = generate_semilattice(rng, 6);
    const CrispRep r = generate_crisp_rep(rng, s1, s2, 0.3);
    const CrispRep q = generate_crisp_rep(rng, s2, s3, 0.3);
    CHECK(compose(identity_rep(s1), r) == r);
    CHECK(compose(r, identity_rep(s2)) == r);
    CHECK(compose(r, q) == compose_closure(r, q));
    CHECK(kernels::bool_product_serial(r.table(), q.table()) ==
          kernels::bool_product_parallel(r.table(), q.table()));
    // Relational product by definition.
    for (Index x = 0; x < s1->size(); ++x)
      for (Index z = 0; z < s3->size(); ++z) {
        bool via = false;
        for (Index y = 0; y < s2->size(); ++y) via = via || (r.contains(x, y) && q.contains(y, z));
        CHECK(compose(r, q).contains(x, z) == via);
      }
  }
  try {
    compose(full_rep(c, d), full_rep(c, d));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MiddleMismatch);
  }
}

TEST_CASE("pseudo-inverse values") {
  const SemilatticePtr c = c2();
  CHECK(pseudo_inverse(identity_rep(c)) == identity_rep(dual_of(c)));
  CHECK(pseudo_inverse(identity_rep(d4())) == identity_rep(dual_of(d4())));
  const CrispRep full = full_rep(c, c);
  CHECK(pseudo_inverse(full) == identity_rep(dual_of(c)));
  CHECK(pseudo_inverse(full).table().count() < full_rep(dual_of(c), dual_of(c)).table().count());
  CHECK(double_pseudo_inverse(full) == rep(c, c, {{"0", "0"}, {"1", "0"}, {"1", "1"}}));
  CHECK(double_pseudo_inverse(identity_rep(d4())) == identity_rep(d4()));

  const SemilatticeMorphism f = c2_to_c3();
  CHECK(pseudo_inverse(embed_morphism(f)) == embed_morphism(dual_map(f)));
  CHECK(oracle::pinv_oracle(full) == identity_rep(dual_of(c)));
}

TEST_CASE("pseudo-invertibility") {
  for (const auto& [name, s] : catalog::semilattices()) CHECK(is_pseudo_invertible(identity_rep(s)));
  const SemilatticePtr c = c2();
  const Verdict v = is_pseudo_invertible(full_rep(c, c));
  CHECK_FALSE(v);
  CHECK(v.witness == std::vector<Index>{ix(c, "0"), ix(c, "1"), ix(c, "0")});
}

TEST_CASE("pseudo-inverse against the filter formula") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    CaseRng rng(17, i);
    const SemilatticePtr s1 = generate_semilattice(rng, 6), s2 = generate_semilattice(rng, 6);
    const auto mode = static_cast<PseudoInvertibility>(i % 3);
    const CrispRep r = generate_crisp_rep(rng, s1, s2, 0.3, mode);
    const CrispRep inv = pseudo_inverse(r);
    CHECK(inv == pinv_by_filters(r));
    CHECK(oracle::pinv_oracle(r) == inv);

    const bool zero_row = r.row(s1->zero()).count() == 1;
    CHECK(static_cast<bool>(is_pseudo_invertible(r)) == zero_row);
    if (mode == PseudoInvertibility::Required) CHECK(zero_row);
    if (mode == PseudoInvertibility::Violated) CHECK_FALSE(zero_row);
    CHECK(double_pseudo_inverse(r) == trim_zero_row(r));
    CHECK(is_subrep(double_pseudo_inverse(r), r));
    CHECK(is_pseudo_invertible(inv));

    const Compatibility p1 = generate_separating(rng, s1);
    const Compatibility p2 = generate_separating(rng, s2);
    const CrispRep native = pseudo_inverse(r, p1, p2);
    CHECK(oracle::pinv_oracle(r, p1, p2) == native);
    CHECK(to_canonical_duals(native, p1, p2) == inv);
  }
}

TEST_CASE("arrows of the segment example") {
  const demos::SegmentsReport seg = demos::demo_segments(6);
  CHECK(seg.size == 28);
  CHECK(seg.meet == "s0_6");
  CHECK(seg.r_prime_arrow);
  REQUIRE_FALSE(seg.r_arrow);
  CHECK(seg.r_arrow.witness ==
        std::vector<Index>{catalog::segment_index(6, 0, 2), catalog::segment_index(6, 4, 6), 1});
  CHECK_THROWS_AS(catalog::segments(8), Error);

  for (std::uint64_t i = 0; i < 40; ++i) {
    CaseRng rng(23, i);
    const SemilatticePtr a = generate_semilattice(rng, 6), b = generate_semilattice(rng, 6);
    CHECK(is_sem0_arrow(embed_morphism(generate_morphism(rng, a, b))));
  }
}

TEST_CASE("arrows need not have principal rows") {
  // 1R = {0, a, b} has no greatest element, yet the criterion holds.
  const SemilatticePtr a = c2(), v = v3();
  const CrispRep r = rep(a, v, {{"0", "0"}, {"1", "0"}, {"1", "a"}, {"1", "b"}});
  CHECK(is_sem0_arrow(r));
  CHECK(is_pseudo_invertible(r));
  CHECK_THROWS_AS(rep_to_morphism(r), Error);
}
