#include "ambrep/laws.hpp"

#include <functional>
#include <sstream>

#include "ambrep/catalog.hpp"
#include "ambrep/dsl.hpp"
#include "ambrep/kernels.hpp"
#include "ambrep/oracle.hpp"

namespace ambrep::laws {

namespace {

struct Check {
  bool applicable = true;
  bool ok = true;
  std::string detail;
};

Check pass() { return {}; }
Check fail(std::string detail) { return {true, false, std::move(detail)}; }
Check skip() { return {false, true, {}}; }

/// Returns the first failing condition, or a pass.
Check all(std::initializer_list<std::pair<bool, const char*>> conditions) {
  for (const auto& [ok, what] : conditions)
    if (!ok) return fail(what);
  return pass();
}

/// Objects of one case, collected into a replayable document.
class Instance {
 public:
  std::string add(const SemilatticePtr& s) {
    for (const auto& [known, name] : semis_)
      if (same_semilattice(known, s)) return name;
    std::string name = "S" + std::to_string(semis_.size() + 1);
    semis_.emplace_back(s, name);
    doc_.add_poset(name, s->poset());
    return name;
  }
  void rep(const std::string& name, const CrispRep& r) {
    doc_.add_rep(name, add(r.source()), add(r.target()), r);
  }
  void map(const std::string& name, const SemilatticeMorphism& f) {
    doc_.add_map(name, add(f.source()), add(f.target()), f);
  }
  void quantale(const Quantale& q) {
    doc_.add_poset("L", q.lattice()->poset());
    doc_.add_quantale("Mul", "L", q);
  }
  void fuzzy(const std::string& name, const FuzzyRep& r) {
    doc_.add_fuzzy_rep(name, add(r.source()), add(r.target()), "L", r);
  }
  std::string text() const { return dsl::render(doc_); }

 private:
  std::vector<std::pair<SemilatticePtr, std::string>> semis_;
  dsl::Document doc_;
};

struct Outcome {
  std::string id;
  bool ok;
  std::string instance;
  std::string detail;
};

class CaseLog {
 public:
  template <class F>
  void law(const std::string& id, const Instance& inst, F&& body) {
    Check c;
    try {
      c = body();
    } catch (const std::exception& e) {
      c = fail(std::string("exception: ") + e.what());
    }
    if (!c.applicable) return;
    outcomes.push_back({id, c.ok, c.ok ? std::string() : inst.text(), c.detail});
  }

  std::vector<Outcome> outcomes;
};

struct Context {
  const GeneratorConfig& config;
  std::size_t case_index;
  const Mutation& mutation;

  bool catalog_case() const { return case_index % 5 == 4; }
  CaseRng rng(std::uint64_t salt) const { return CaseRng(config.seed ^ salt, case_index); }
};

const std::vector<catalog::NamedSemilattice>& catalog_semilattices() {
  static const auto all = catalog::semilattices();
  return all;
}

SemilatticePtr pick(CaseRng& rng, const Context& ctx, std::size_t cap) {
  const std::size_t limit = std::min(ctx.config.max_size, cap);
  if (ctx.catalog_case()) {
    std::vector<SemilatticePtr> fit;
    for (const auto& c : catalog_semilattices())
      if (c.semilattice->size() <= limit) fit.push_back(c.semilattice);
    if (!fit.empty()) return fit[rng.below(fit.size())];
  }
  return generate_semilattice(rng, limit);
}

PseudoInvertibility pick_mode(CaseRng& rng) {
  switch (rng.below(3)) {
    case 0:
      return PseudoInvertibility::Required;
    case 1:
      return PseudoInvertibility::Violated;
    default:
      return PseudoInvertibility::Any;
  }
}

std::string set_text(const FinitePoset& p, const ElementSet& s) {
  std::string out = "{";
  for (Index i : members(s)) out += (out.size() > 1 ? " " : "") + p.name(i);
  return out + "}";
}

// ------------------------------------------------------------------ order

void order_case(const Context& ctx, CaseLog& log) {
  CaseRng rng = ctx.rng(0x0DE5);
  const SemilatticePtr s = pick(rng, ctx, 12);
  const FinitePoset& p = s->poset();
  Instance inst;
  inst.add(s);

  log.law("LAW-WB", inst, [&] {
    const BoolMatrix oracle = oracle::wb_oracle(p);
    return all({{oracle == p.way_below_table(), "way-below table differs from the directed-set scan"},
                {way_below(p) == oracle, "way_below(P) differs from the directed-set scan"},
                {p.way_below_table().column(s->zero()).none(), "something is way below 0"}});
  });

  log.law("LAW-INTERP", inst, [&] {
    for (Index a = 0; a < p.size(); ++a)
      for (Index c = 0; c < p.size(); ++c) {
        if (!p.way_below(a, c)) continue;
        bool found = false;
        for (Index b = 0; b < p.size() && !found; ++b) found = p.way_below(a, b) && p.way_below(b, c);
        if (!found) return fail("no interpolant between " + p.name(a) + " and " + p.name(c));
      }
    return pass();
  });

  log.law("LAW-WBPROP", inst, [&] {
    for (Index a = 0; a < p.size(); ++a)
      for (Index b = 0; b < p.size(); ++b) {
        if (p.way_below(a, b) && !p.leq(a, b)) return fail(p.name(a) + " ≪ " + p.name(b) + " but not ≤");
        if (a != b && p.way_below(a, b) && p.way_below(b, a))
          return fail("≪ not antisymmetric at " + p.name(a) + ", " + p.name(b));
        for (Index c = 0; c < p.size(); ++c)
          if (p.way_below(a, b) && p.way_below(b, c) && !p.way_below(a, c))
            return fail("≪ not transitive at " + p.name(a) + ", " + p.name(b) + ", " + p.name(c));
      }
    return pass();
  });

  const ElementSet a = generate_subset(rng, p.size(), 0.3);
  const ElementSet b = a | generate_subset(rng, p.size(), 0.3);
  log.law("LAW-CLOSURE", inst, [&] {
    const ElementSet ca = scott_closure(p, a);
    const ElementSet cb = scott_closure(p, b);
    Check c = all({{a.is_subset_of(ca), "closure is not extensive"},
                   {scott_closure(p, ca) == ca, "closure is not idempotent"},
                   {ca.is_subset_of(cb), "closure is not monotone"},
                   {is_lower(p, ca), "closure is not a lower set"}});
    if (!c.ok) c.detail += " on A=" + set_text(p, a) + ", B=" + set_text(p, b);
    return c;
  });

  const SemilatticePtr t1 = generate_semilattice(rng, std::min<std::size_t>(ctx.config.max_size, 4));
  const SemilatticePtr t2 = generate_semilattice(rng, std::min<std::size_t>(ctx.config.max_size, 4));
  const SemilatticePtr t3 = generate_semilattice(rng, std::min<std::size_t>(ctx.config.max_size, 4));
  const std::size_t n2 = t2->size(), n3 = t3->size();
  ElementSet rel = generate_subset(rng, t1->size() * n2 * n3, 0.2);
  const std::size_t kind = rng.below(3);
  if (kind != 0) {
    // Close downward in the product order; kind 2 then punches one hole.
    ElementSet closed(rel.size());
    for (Index k : members(rel)) {
      const Index x = k / (n2 * n3), y = k / n3 % n2, z = k % n3;
      for (Index x2 : members(t1->poset().down_set(x)))
        for (Index y2 : members(t2->poset().down_set(y)))
          for (Index z2 : members(t3->poset().down_set(z))) closed.set((x2 * n2 + y2) * n3 + z2);
    }
    rel = closed;
    if (kind == 2 && rel.any()) {
      const auto in = members(rel);
      rel.reset(in[rng.below(in.size())]);
    }
  }
  Instance cut_inst;
  cut_inst.add(t1);
  cut_inst.add(t2);
  cut_inst.add(t3);
  log.law("LAW-CUT", cut_inst, [&] {
    const auto r = oracle::cuts_lemma_check(rel, t1->poset(), t2->poset(), t3->poset());
    if (r.relation_lower == r.cuts_lower) return pass();
    std::string bits;
    boost::to_string(rel, bits);
    return fail("relation lower: " + std::string(r.relation_lower ? "yes" : "no") +
                ", cuts lower: " + (r.cuts_lower ? "yes" : "no") + ", relation bits " + bits);
  });

  log.law("LAW-CD", inst, [&] {
    if (!p.top() || p.size() > 4) return skip();
    const BoundedLattice l = lattice_structure(p);
    const bool finite = static_cast<bool>(check_distributive(l));
    const bool brute = static_cast<bool>(oracle::cd_oracle(l));
    if (finite == brute) return pass();
    return fail("distributivity " + std::string(finite ? "holds" : "fails") +
                " but the collection scan says otherwise");
  });
}

// ------------------------------------------------------------------ dual

void dual_case(const Context& ctx, CaseLog& log) {
  CaseRng rng = ctx.rng(0xD0A1);
  const SemilatticePtr s1 = pick(rng, ctx, 12);
  const SemilatticePtr s2 = pick(rng, ctx, 12);
  const SemilatticePtr s3 = pick(rng, ctx, 12);
  const SemilatticeMorphism f = generate_morphism(rng, s1, s2);
  const SemilatticeMorphism g = generate_morphism(rng, s2, s3);
  Instance inst;
  inst.map("f", f);
  inst.map("g", g);

  log.law("LAW-DUAL-ORACLE", inst, [&] {
    for (const auto& s : {s1, s2}) {
      const auto r = oracle::check_lawson_dual(s);
      if (!r.agree) return fail(*r.witness);
    }
    return pass();
  });

  log.law("LAW-DUAL-SHAPE", inst, [&] {
    const DualSemilattice d = lawson_dual(s1);
    const MeetSemilattice& s = *s1;
    const std::size_t n = s.size();
    if (d.size() != n) return fail("|S^∧| ≠ |S|");
    // (S ∖ {0})^op with a fresh bottom in place of 0.
    BoolMatrix leq(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        leq.set(i, j, i == s.zero() || (j != s.zero() && s.leq(j, i)));
    const FinitePoset shape = FinitePoset::from_table(s.poset().names(), std::move(leq));
    if (!find_isomorphism(shape, d.semilattice()->poset()))
      return fail("S^∧ is not (S∖{0})^op with a bottom adjoined");
    for (Index i = 0; i < n; ++i) {
      if (!is_filter(s, d.filter(i)) || d.filter(i).all())
        return fail("dual element " + d.semilattice()->name(i) + " is not a proper filter");
      if (d.element_of(d.filter_of(i)) != i) return fail("filter_of/element_of round trip");
      if (d.find(d.filter(i)) != std::optional<Index>(i)) return fail("find(filter) round trip");
    }
    return d.semilattice()->zero() == d.filter_of(s.zero()) && d.filter(d.semilattice()->zero()).none()
               ? pass()
               : fail("dual zero is not the empty filter");
  });

  log.law("LAW-DUAL-ISO", inst, [&] {
    const SemilatticeMorphism u1 = canonical_iso(s1);
    const SemilatticeMorphism u2 = canonical_iso(s2);
    const SemilatticeMorphism ff = dual_map(dual_map(f));
    return all({{is_order_iso(u1), "u_S is not an order isomorphism"},
                {same_semilattice(dual_of(dual_of(s1)), s1), "S^∧∧ differs from S"},
                {then(f, u2) == then(u1, ff), "naturality square fails"}});
  });

  log.law("LAW-DUAL-CONTRA", inst, [&] {
    return all({{dual_map(then(f, g)) == then(dual_map(g), dual_map(f)), "(g∘f)^∧ ≠ f^∧∘g^∧"},
                {dual_map(identity_morphism(s1)) == identity_morphism(dual_of(s1)),
                 "id^∧ is not the identity"}});
  });

  log.law("LAW-DUAL-MORPH", inst, [&] {
    const SemilatticeMorphism fd = dual_map(f);
    Verdict v = check_morphism(*fd.source(), *fd.target(), fd.table());
    if (!v) return fail("f^∧ is not a morphism: " + v.detail);
    const SemilatticeMorphism zd = dual_map(constant_zero(s1, s2));
    for (Index i : zd.table())
      if (i != zd.target()->zero()) return fail("dual of the zero map is not zero");
    return pass();
  });
}

// ------------------------------------------------------------------ compat

void compat_case(const Context& ctx, CaseLog& log) {
  CaseRng rng = ctx.rng(0xC0C0);
  const SemilatticePtr s = pick(rng, ctx, 8);
  const Compatibility canonical = canonical_pairing(s);
  const Compatibility relabeled = generate_separating(rng, s);
  Instance inst;
  inst.add(s);
  inst.add(relabeled.right());
  const std::size_t n = s->size();

  const ElementSet a = generate_subset(rng, n, 0.3);
  const ElementSet b = a | generate_subset(rng, n, 0.3);
  const ElementSet a2 = generate_subset(rng, n, 0.3);
  const ElementSet b2 = a2 | generate_subset(rng, n, 0.3);

  log.law("LAW-TRANS-ANTI", inst, [&] {
    for (const Compatibility* p : {&canonical, &relabeled}) {
      if (!transversal(*p, b, Side::Left).is_subset_of(transversal(*p, a, Side::Left)))
        return fail("A ⊆ B but B^⊥ ⊄ A^⊥ (left side)");
      if (!transversal(*p, b2, Side::Right).is_subset_of(transversal(*p, a2, Side::Right)))
        return fail("A ⊆ B but B^⊥ ⊄ A^⊥ (right side)");
    }
    return pass();
  });

  log.law("LAW-TRANS-CLOSURE", inst, [&] {
    for (const Compatibility* p : {&canonical, &relabeled}) {
      const ElementSet left = transversal(*p, transversal(*p, a, Side::Left), Side::Right);
      if (left != scott_closure(s->poset(), a))
        return fail("A^⊥⊥ ≠ Cl(A) for A=" + set_text(s->poset(), a));
      const FinitePoset& rp = p->right()->poset();
      const ElementSet right = transversal(*p, transversal(*p, a2, Side::Right), Side::Left);
      if (right != scott_closure(rp, a2)) return fail("A^⊥⊥ ≠ Cl(A) on the right side");
      if (!is_lower(rp, transversal(*p, a, Side::Left))) return fail("A^⊥ is not lower");
    }
    return pass();
  });

  log.law("LAW-TRANS-FILTERED", inst, [&] {
    std::vector<ElementSet> family;
    ElementSet current = scott_closure(s->poset(), generate_subset(rng, n, 0.6));
    for (int k = 0; k < 3; ++k) {
      family.push_back(current);
      current &= scott_closure(s->poset(), generate_subset(rng, n, 0.7));
    }
    for (const Compatibility* p : {&canonical, &relabeled}) {
      ElementSet meet = s->poset().full_set();
      ElementSet joined(p->right()->size());
      for (const auto& lower : family) {
        meet &= lower;
        joined |= transversal(*p, lower, Side::Left);
      }
      if (transversal(*p, meet, Side::Left) != scott_closure(p->right()->poset(), joined))
        return fail("(⋂A)^⊥ ≠ Cl(⋃A^⊥) for a chain of lower sets");
    }
    return pass();
  });

  log.law("LAW-POLAR", inst, [&] {
    for (const Compatibility* p : {&canonical, &relabeled}) {
      if (!check_separating(*p)) return fail("generated compatibility does not separate");
      const PolarIso pi = compat_to_iso(*p);
      if (!(iso_to_compat(pi.iso, pi.dual) == *p)) return fail("iso_to_compat ∘ compat_to_iso ≠ id");
      if (!(compat_to_iso(iso_to_compat(pi.iso, pi.dual)).iso == pi.iso))
        return fail("compat_to_iso ∘ iso_to_compat ≠ id");
      if (!(reverse(reverse(*p)) == *p) || !check_separating(reverse(*p)))
        return fail("reverse is not an involution preserving separation");
    }
    const PolarIso ci = compat_to_iso(canonical);
    return ci.iso == identity_morphism(dual_of(dual_of(s))) || is_order_iso(ci.iso)
               ? pass()
               : fail("canonical pairing does not give an isomorphism");
  });

  const SemilatticePtr small = generate_semilattice(rng, std::min<std::size_t>(ctx.config.max_size, 4));
  const SemilatticePtr other = rng.chance(0.5)
                                   ? generate_separating(rng, small).right()
                                   : generate_semilattice(rng, std::min<std::size_t>(ctx.config.max_size, 4));
  Instance sep_inst;
  sep_inst.add(small);
  sep_inst.add(other);
  log.law("LAW-SEP-COUNT", sep_inst, [&] {
    if (small->size() * other->size() > 16) return skip();
    const auto found = oracle::search_separating(small, other);
    const std::size_t isos = oracle::count_isomorphisms(*small, *dual_of(other));
    if (found.size() != isos)
      return fail(std::to_string(found.size()) + " separating compatibilities but " +
                  std::to_string(isos) + " isomorphisms onto the dual");
    for (const auto& p : found)
      if (!is_order_iso(compat_to_iso(p).iso)) return fail("found table does not give an isomorphism");
    return pass();
  });
}

// ------------------------------------------------------------------ crisp

CrispRep trimmed(const CrispRep& r) {
  BoolMatrix t = r.table();
  t.row(r.source()->zero()).reset();
  t.set(r.source()->zero(), r.target()->zero());
  return check_rep(std::move(t), r.source(), r.target());
}

bool principal_rows(const CrispRep& r) {
  for (Index x = 0; x < r.source()->size(); ++x)
    if (!r.target()->poset().greatest(r.row(x))) return false;
  return true;
}

bool in_morphism_image(const CrispRep& r) {
  try {
    return embed_morphism(rep_to_morphism(r)) == r;
  } catch (const Error&) {
    return false;
  }
}

void crisp_case(const Context& ctx, CaseLog& log) {
  CaseRng rng = ctx.rng(0xC415);
  const std::size_t cap = 8;
  const SemilatticePtr s1 = pick(rng, ctx, cap), s2 = pick(rng, ctx, cap);
  const SemilatticePtr s3 = pick(rng, ctx, cap), s4 = pick(rng, ctx, cap);
  const double d = ctx.config.density;
  const CrispRep r = generate_crisp_rep(rng, s1, s2, d, pick_mode(rng));
  const CrispRep q = generate_crisp_rep(rng, s2, s3, d);
  const CrispRep t = generate_crisp_rep(rng, s3, s4, d);
  const CrispRep rp = generate_crisp_rep(rng, s1, s2, d, PseudoInvertibility::Required);
  const CrispRep qp = generate_crisp_rep(rng, s2, s3, d, PseudoInvertibility::Required);
  const CrispRep tp = generate_crisp_rep(rng, s3, s4, d, PseudoInvertibility::Required);
  const SemilatticeMorphism f = generate_morphism(rng, s1, s2);
  const SemilatticeMorphism g = generate_morphism(rng, s2, s3);
  const Compatibility p1 = generate_separating(rng, s1);
  const Compatibility p2 = generate_separating(rng, s2);
  const SemilatticePtr c2 = catalog_semilattices().front().semilattice;
  const CrispRep rc2 = generate_crisp_rep(rng, s1, c2, 0.4);

  auto pinv = [&](const CrispRep& x) {
    if (ctx.mutation.corrupt_pinv) return full_rep(dual_of(x.target()), dual_of(x.source()));
    return pseudo_inverse(x);
  };

  Instance one;
  one.rep("R", r);
  Instance two;
  two.rep("R", r);
  two.rep("Q", q);
  Instance pis;
  pis.rep("R", rp);
  pis.rep("Q", qp);
  pis.rep("T", tp);
  Instance maps;
  maps.map("f", f);
  maps.map("g", g);

  log.law("LAW-ANTI", one, [&] {
    return is_subrep(pinv(pinv(r)), r) ? pass() : fail("R^♯♯ ⊄ R");
  });

  log.law("LAW-INV", one, [&] {
    const CrispRep dd = pinv(pinv(r));
    const bool fixed = dd == r;
    const Verdict c = is_pseudo_invertible(r);
    const bool zero_row = r.row(s1->zero()).count() == 1;
    if (fixed != c.holds || fixed != zero_row)
      return fail(std::string("R^♯♯ = R: ") + (fixed ? "yes" : "no") + ", condition (c): " +
                  (c.holds ? "yes" : "no") + ", 0-row = {0₂}: " + (zero_row ? "yes" : "no"));
    if (!(dd == trimmed(r))) return fail("R^♯♯ is not R with its 0-row trimmed");
    return pass();
  });

  log.law("LAW-LEM", two, [&] {
    return is_subrep(compose(pinv(q), pinv(r)), pinv(compose(r, q))) ? pass()
                                                                     : fail("Q^♯;R^♯ ⊄ (R;Q)^♯");
  });

  log.law("LAW-CONTRA", pis, [&] {
    const CrispRep rq = compose(rp, qp);
    return all({{pinv(rq) == compose(pinv(qp), pinv(rp)), "(R;Q)^♯ ≠ Q^♯;R^♯"},
                {static_cast<bool>(is_pseudo_invertible(rq)), "R;Q is not pseudo-invertible"}});
  });

  Instance three;
  three.rep("R", r);
  three.rep("Q", q);
  three.rep("T", t);
  log.law("LAW-ASSOC", three, [&] {
    return all({{compose(compose(rp, qp), tp) == compose(rp, compose(qp, tp)),
                 "(R;Q);T ≠ R;(Q;T) on pseudo-invertible representations"},
                {compose(compose(r, q), t) == compose(r, compose(q, t)), "(R;Q);T ≠ R;(Q;T)"}});
  });

  log.law("LAW-ID", one, [&] {
    return all({{compose(identity_rep(s1), r) == r, "E;R ≠ R"},
                {compose(r, identity_rep(s2)) == r, "R;E ≠ R"},
                {static_cast<bool>(is_pseudo_invertible(identity_rep(s1))),
                 "E is not pseudo-invertible"}});
  });

  log.law("LAW-EXT", maps, [&] {
    return all({{pinv(embed_morphism(f)) == embed_morphism(dual_map(f)), "(If)^♯ ≠ I(f^∧)"},
                {embed_morphism(then(f, g)) == compose(embed_morphism(f), embed_morphism(g)),
                 "I(g∘f) ≠ If;Ig"},
                {embed_morphism(identity_morphism(s1)) == identity_rep(s1), "I(id) ≠ E"},
                {rep_to_morphism(embed_morphism(f)) == f, "rep_to_morphism ∘ I ≠ id"}});
  });

  log.law("LAW-SEMI", two, [&] {
    return all({{compose(r, q) == compose_closure(r, q), "relational product ≠ closure definition"},
                {kernels::bool_product_serial(r.table(), q.table()) ==
                     kernels::bool_product_parallel(r.table(), q.table()),
                 "serial and parallel products differ"}});
  });

  Instance routes;
  routes.rep("R", r);
  routes.add(p1.right());
  routes.add(p2.right());
  log.law("LAW-PINV-ROUTES", routes, [&] {
    const auto rep = oracle::check_pseudo_inverse(r);
    if (!rep.agree) return fail(*rep.witness);
    const CrispRep native = pseudo_inverse(r, p1, p2);
    return all({{oracle::pinv_oracle(r, p1, p2) == native,
                 "transversal formula differs from the defining formula under relabeled duals"},
                {to_canonical_duals(native, p1, p2) == pseudo_inverse(r),
                 "relabeled route does not transport to the canonical one"},
                {kernels::pinv_transpose_serial(r.table(), s1->zero(), s2->zero()) ==
                     kernels::pinv_transpose_parallel(r.table(), s1->zero(), s2->zero()),
                 "serial and parallel transposes differ"}});
  });

  log.law("LAW-PINV-PI", one, [&] {
    return is_pseudo_invertible(pinv(r)) ? pass() : fail("R^♯ is not pseudo-invertible");
  });

  Instance sem0;
  sem0.rep("R", r);
  sem0.rep("R2", rc2);
  sem0.map("f", f);
  log.law("LAW-SEM0", sem0, [&] {
    // Morphisms keep 0 ↦ 0, so the comparison is among pseudo-invertible R.
    auto arrow = [](const CrispRep& x) {
      return static_cast<bool>(is_sem0_arrow(x)) && static_cast<bool>(is_pseudo_invertible(x));
    };
    if (!is_sem0_arrow(embed_morphism(f))) return fail("If fails the criterion");
    if (arrow(rc2) != in_morphism_image(rc2))
      return fail("criterion and image of I disagree for a representation into a chain");
    if (principal_rows(r) && arrow(r) != in_morphism_image(r))
      return fail("criterion and image of I disagree on principal rows");
    return pass();
  });
}

// ------------------------------------------------------------------ fuzzy

FuzzyRep fuzzy_trimmed(const FuzzyRep& r) {
  std::vector<Index> g = r.grades();
  const std::size_t n2 = r.target()->size();
  for (Index y = 0; y < n2; ++y)
    if (y != r.target()->zero()) g[r.source()->zero() * n2 + y] = r.lattice()->zero();
  return check_fuzzy_rep(std::move(g), r.source(), r.target(), r.lattice());
}

bool zero_row_clear(const FuzzyRep& r) {
  for (Index y = 0; y < r.target()->size(); ++y)
    if (y != r.target()->zero() && r.grade(r.source()->zero(), y) != r.lattice()->zero())
      return false;
  return true;
}

const std::vector<catalog::NamedQuantale>& catalog_quantales() {
  static const auto all = catalog::quantales();
  return all;
}

void fuzzy_case(const Context& ctx, CaseLog& log) {
  CaseRng rng = ctx.rng(0xF022);
  const Quantale quantale =
      ctx.config.quantale == "mixed"
          ? catalog_quantales()[ctx.case_index % catalog_quantales().size()].quantale
          : catalog::quantale(ctx.config.quantale);
  const Quantale hat = opposite_quantale(quantale);
  const LatticePtr l = quantale.lattice();
  const std::size_t cap = 8;
  const SemilatticePtr s1 = pick(rng, ctx, cap), s2 = pick(rng, ctx, cap);
  const SemilatticePtr s3 = pick(rng, ctx, cap), s4 = pick(rng, ctx, cap);
  const double d = ctx.config.density;
  const FuzzyRep r = generate_fuzzy_rep(rng, s1, s2, l, d, pick_mode(rng));
  const FuzzyRep q = generate_fuzzy_rep(rng, s2, s3, l, d);
  const FuzzyRep t = generate_fuzzy_rep(rng, s3, s4, l, d);
  const FuzzyRep rp = generate_fuzzy_rep(rng, s1, s2, l, d, PseudoInvertibility::Required);
  const FuzzyRep qp = generate_fuzzy_rep(rng, s2, s3, l, d, PseudoInvertibility::Required);
  const FuzzyRep tp = generate_fuzzy_rep(rng, s3, s4, l, d, PseudoInvertibility::Required);
  const CrispRep rc = generate_crisp_rep(rng, s1, s2, d, pick_mode(rng));
  const CrispRep qc = generate_crisp_rep(rng, s2, s3, d);

  Instance base;
  base.quantale(quantale);
  Instance one = base;
  one.fuzzy("R", r);
  Instance two = base;
  two.fuzzy("R", r);
  two.fuzzy("Q", q);
  Instance three = base;
  three.fuzzy("R", r);
  three.fuzzy("Q", q);
  three.fuzzy("T", t);
  Instance pis = base;
  pis.fuzzy("R", rp);
  pis.fuzzy("Q", qp);
  pis.fuzzy("T", tp);

  log.law("LAW-FANTI", one, [&] {
    return is_subrep(fuzzy_double_pseudo_inverse(r), r) ? pass() : fail("R^♯♯ ⊄ R");
  });

  log.law("LAW-FINV", one, [&] {
    const FuzzyRep dd = fuzzy_double_pseudo_inverse(r);
    const bool fixed = dd == r;
    const Verdict dv = is_pseudo_invertible_fuzzy(r);
    const bool clear = zero_row_clear(r);
    if (fixed != dv.holds || fixed != clear)
      return fail(std::string("R^♯♯ = R: ") + (fixed ? "yes" : "no") + ", condition (d): " +
                  (dv.holds ? "yes" : "no") + ", g(0,·) clear: " + (clear ? "yes" : "no"));
    return all({{dd == fuzzy_trimmed(r), "R^♯♯ is not R with g(0,·) trimmed"},
                {fuzzy_double_pseudo_inverse(rp) == rp, "R^♯♯ ≠ R on a pseudo-invertible R"}});
  });

  log.law("LAW-FLEM", two, [&] {
    return is_subrep(compose_fuzzy(fuzzy_pseudo_inverse(q), fuzzy_pseudo_inverse(r), hat),
                     fuzzy_pseudo_inverse(compose_fuzzy(r, q, quantale)))
               ? pass()
               : fail("Q^♯ ⊛̂ R^♯ ⊄ (R⊛Q)^♯");
  });

  log.law("LAW-FCONTRA", pis, [&] {
    const FuzzyRep rq = compose_fuzzy(rp, qp, quantale);
    return all({{fuzzy_pseudo_inverse(rq) ==
                     compose_fuzzy(fuzzy_pseudo_inverse(qp), fuzzy_pseudo_inverse(rp), hat),
                 "(R⊛Q)^♯ ≠ Q^♯ ⊛̂ R^♯"},
                {static_cast<bool>(is_pseudo_invertible_fuzzy(rq)),
                 "R⊛Q is not pseudo-invertible"}});
  });

  log.law("LAW-FASSOC", three, [&] {
    return all({{compose_fuzzy(compose_fuzzy(rp, qp, quantale), tp, quantale) ==
                     compose_fuzzy(rp, compose_fuzzy(qp, tp, quantale), quantale),
                 "(R⊛Q)⊛T ≠ R⊛(Q⊛T) on pseudo-invertible representations"},
                {compose_fuzzy(compose_fuzzy(r, q, quantale), t, quantale) ==
                     compose_fuzzy(r, compose_fuzzy(q, t, quantale), quantale),
                 "(R⊛Q)⊛T ≠ R⊛(Q⊛T)"}});
  });

  log.law("LAW-FCUT", one, [&] {
    const FuzzyRep inv = fuzzy_pseudo_inverse(r);
    for (Index a = 0; a < l->size(); ++a) {
      const CrispRep expected = a == l->zero() ? full_rep(dual_of(s2), dual_of(s1))
                                               : pseudo_inverse(alpha_cut(r, a));
      if (!(alpha_cut(inv, a) == expected))
        return fail("(R^♯)_α differs from the cut formula at α=" + l->name(a));
    }
    return pass();
  });

  Instance crisp_pair = base;
  crisp_pair.rep("R", rc);
  crisp_pair.rep("Q", qc);
  log.law("LAW-FEXT", crisp_pair, [&] {
    return all({{embed_crisp(compose(rc, qc), l) ==
                     compose_fuzzy(embed_crisp(rc, l), embed_crisp(qc, l), quantale),
                 "I*(R;Q) ≠ I*R ⊛ I*Q"},
                {fuzzy_pseudo_inverse(embed_crisp(rc, l)) == embed_crisp(pseudo_inverse(rc), l),
                 "(I*R)^♯ ≠ I*(R^♯)"},
                {static_cast<bool>(is_pseudo_invertible_fuzzy(embed_crisp(rc, l))) ==
                     static_cast<bool>(is_pseudo_invertible(rc)),
                 "embedding changes pseudo-invertibility"}});
  });

  log.law("LAW-FDUAL", pis, [&] {
    const FuzzyRep rq = compose_fuzzy(rp, qp, quantale);
    const FuzzyRep back = compose_fuzzy(fuzzy_pseudo_inverse(qp), fuzzy_pseudo_inverse(rp), hat);
    return all({{fuzzy_double_pseudo_inverse(rp) == rp, "R^♯♯ ≠ R"},
                {opposite_quantale(hat) == quantale, "the opposite quantale is not an involution"},
                {fuzzy_pseudo_inverse(back) == rq, "(Q^♯ ⊛̂ R^♯)^♯ ≠ R⊛Q"}});
  });

  log.law("LAW-FORACLE", two, [&] {
    const auto pr = oracle::check_fuzzy_pseudo_inverse(r);
    if (!pr.agree) return fail(*pr.witness);
    const auto cr = oracle::check_compose_fuzzy(r, q, quantale);
    if (!cr.agree) return fail(*cr.witness);
    std::vector<Index> joins(l->size() * l->size());
    for (Index a = 0; a < l->size(); ++a)
      for (Index b = 0; b < l->size(); ++b) joins[a * l->size() + b] = l->join(a, b);
    const kernels::OpTable join{l->size(), &joins};
    const kernels::OpTable mul{l->size(), &quantale.mul_table()};
    const auto serial = kernels::quantale_product_serial(
        r.grades(), q.grades(), s1->size(), s2->size(), s3->size(), join, mul, l->zero());
    const auto parallel = kernels::quantale_product_parallel(
        r.grades(), q.grades(), s1->size(), s2->size(), s3->size(), join, mul, l->zero());
    return serial == parallel ? pass() : fail("serial and parallel quantale products differ");
  });

  log.law("LAW-FCUTS", one, [&] {
    const CutFamily cuts = to_cuts(r);
    return from_cuts(cuts) == r ? pass() : fail("from_cuts ∘ to_cuts ≠ id");
  });

  log.law("LAW-FFORMS", one, [&] {
    if (!(from_ternary(to_ternary(r), s1, s2, l) == r)) return fail("from_ternary ∘ to_ternary ≠ id");
    for (int k = 0; k < 8; ++k) {
      const ElementSet x = generate_subset(rng, l->size(), 0.5);
      const GradeForms f = grade_forms(*l, x);
      if (f.c1 != f.c2 || f.c2 != f.c3)
        return fail("the three grade conditions disagree on " + set_text(l->poset(), x));
    }
    return pass();
  });
}

// ------------------------------------------------------------------ driver

struct Module {
  const char* name;
  std::vector<std::string> ids;
  void (*run)(const Context&, CaseLog&);
};

const std::vector<Module>& modules() {
  static const std::vector<Module> all = {
      {"order",
       {"LAW-WB", "LAW-INTERP", "LAW-WBPROP", "LAW-CLOSURE", "LAW-CUT", "LAW-CD"},
       order_case},
      {"dual",
       {"LAW-DUAL-ORACLE", "LAW-DUAL-SHAPE", "LAW-DUAL-ISO", "LAW-DUAL-CONTRA", "LAW-DUAL-MORPH"},
       dual_case},
      {"compat",
       {"LAW-TRANS-ANTI", "LAW-TRANS-CLOSURE", "LAW-TRANS-FILTERED", "LAW-POLAR", "LAW-SEP-COUNT"},
       compat_case},
      {"crisp",
       {"LAW-ANTI", "LAW-INV", "LAW-LEM", "LAW-CONTRA", "LAW-ASSOC", "LAW-ID", "LAW-EXT",
        "LAW-SEMI", "LAW-PINV-ROUTES", "LAW-PINV-PI", "LAW-SEM0"},
       crisp_case},
      {"fuzzy",
       {"LAW-FANTI", "LAW-FINV", "LAW-FLEM", "LAW-FCONTRA", "LAW-FASSOC", "LAW-FCUT", "LAW-FEXT",
        "LAW-FDUAL", "LAW-FORACLE", "LAW-FCUTS", "LAW-FFORMS"},
       fuzzy_case},
  };
  return all;
}

std::vector<const Module*> selected(const std::string& suite) {
  std::vector<const Module*> out;
  for (const auto& m : modules())
    if (suite == "all" || suite == m.name) out.push_back(&m);
  if (out.empty()) throw Error(ErrorKind::UnknownElement, "unknown suite '" + suite + "'");
  return out;
}

}  // namespace

bool LawReport::all_passed() const {
  for (const auto& l : laws)
    if (l.failed) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"order", "dual", "compat", "crisp", "fuzzy", "all"};
  return names;
}

std::vector<std::string> law_ids(const std::string& suite) {
  std::vector<std::string> ids;
  for (const Module* m : selected(suite)) ids.insert(ids.end(), m->ids.begin(), m->ids.end());
  return ids;
}

LawReport run_suite(const std::string& suite, const GeneratorConfig& config,
                    std::optional<std::size_t> only_case, const Mutation& mutation) {
  const auto mods = selected(suite);
  if (config.quantale != "mixed") catalog::quantale(config.quantale);  // reject unknown names early

  std::vector<std::size_t> indices;
  if (only_case)
    indices.push_back(*only_case);
  else
    for (std::size_t i = 0; i < config.cases; ++i) indices.push_back(i);

  std::vector<CaseLog> logs(indices.size());
  const auto count = static_cast<std::ptrdiff_t>(indices.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const Context ctx{config, indices[k], mutation};
    for (const Module* m : mods) {
      try {
        m->run(ctx, logs[k]);
      } catch (const std::exception& e) {
        // Instance construction failed: charge every law of the module.
        for (const auto& id : m->ids)
          logs[k].outcomes.push_back({id, false, {}, std::string("setup: ") + e.what()});
      }
    }
  }

  LawReport report{suite, config.seed, indices.size(), {}};
  for (const auto& id : law_ids(suite)) report.laws.push_back({id, 0, 0, {}});
  for (std::size_t k = 0; k < logs.size(); ++k)
    for (const auto& o : logs[k].outcomes) {
      for (auto& law : report.laws) {
        if (law.id != o.id) continue;
        if (o.ok) {
          ++law.passed;
        } else {
          ++law.failed;
          if (law.witnesses.size() < kMaxWitnesses)
            law.witnesses.push_back({indices[k], o.instance, o.detail});
        }
      }
    }
  return report;
}

nlohmann::ordered_json to_json(const LawReport& report) {
  nlohmann::ordered_json laws = nlohmann::ordered_json::array();
  for (const auto& l : report.laws) {
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const auto& w : l.witnesses)
      ws.push_back({{"case", w.case_index}, {"instance", w.instance}, {"detail", w.detail}});
    laws.push_back({{"id", l.id}, {"passed", l.passed}, {"failed", l.failed}, {"witnesses", ws}});
  }
  return {{"suite", report.suite}, {"seed", report.seed}, {"cases", report.cases}, {"laws", laws}};
}

std::string to_text(const LawReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << ", seed " << report.seed << ", " << report.cases
      << " cases\n";
  for (const auto& l : report.laws) {
    out << (l.failed ? "FAIL " : "ok   ") << l.id << "  passed " << l.passed << ", failed "
        << l.failed << '\n';
    for (const auto& w : l.witnesses) {
      out << "  case " << w.case_index << ": " << w.detail << '\n';
      std::istringstream lines(w.instance);
      for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
    }
  }
  return out.str();
}

}  // namespace ambrep::laws
