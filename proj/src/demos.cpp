#include "ambrep/demos.hpp"

#include <sstream>

#include "ambrep/catalog.hpp"
#include "ambrep/compat.hpp"

namespace ambrep::demos {

namespace {

std::string set_text(const FinitePoset& p, const ElementSet& s) {
  std::string out = "{";
  for (Index i : members(s)) out += (out.size() > 1 ? " " : "") + p.name(i);
  return out + "}";
}

std::string verdict_text(const Verdict& v) {
  return v.holds ? "true" : "false (witness " + v.detail + ")";
}

/// Name of an element of L read in L^op: 0 and 1 swap, the rest get a prime.
std::string op_name(const BoundedLattice& l, Index i) {
  if (i == l.one()) return "0′";
  if (i == l.zero()) return "1′";
  return l.name(i) + "′";
}

}  // namespace

SegmentsReport demo_segments(std::size_t n) {
  const SemilatticePtr seg = catalog::segments(n);
  const SemilatticePtr c2 = make_semilattice(catalog::chain(2));
  const Index one = *c2->poset().index_of("1");

  BoolMatrix r(seg->size(), 2), rp(seg->size(), 2);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      const Index x = catalog::segment_index(n, i, j);
      r.set(x, c2->zero());
      rp.set(x, c2->zero());
      if (2 * j < n || 2 * i > n) r.set(x, one);
      if (3 * i > n && 3 * j < 2 * n) rp.set(x, one);
    }

  SegmentsReport out;
  out.n = n;
  out.size = seg->size();
  const Index a = catalog::segment_index(n, 0, n / 3);
  const Index b = catalog::segment_index(n, 2 * n / 3, n);
  out.meet_left = seg->name(a);
  out.meet_right = seg->name(b);
  out.meet = seg->name(seg->meet(a, b));
  out.r = check_rep(std::move(r), seg, c2);
  out.r_prime = check_rep(std::move(rp), seg, c2);
  out.r_arrow = is_sem0_arrow(out.r);
  out.r_prime_arrow = is_sem0_arrow(out.r_prime);
  return out;
}

std::string SegmentsReport::text() const {
  std::ostringstream o;
  o << "Seg" << n << ": " << size << " segments, zero s0_" << n << "\n";
  o << "meet(" << meet_left << ", " << meet_right << ") = " << meet << "\n";
  o << "R  (1/2 not in [a,b]):        arrow " << verdict_text(r_arrow) << "\n";
  o << "R' ([a,b] inside (1/3,2/3)):  arrow " << verdict_text(r_prime_arrow) << "\n";
  return o.str();
}

GalleryReport demo_dual_gallery() {
  GalleryReport report;
  for (const auto& [name, lattice] : catalog::gallery()) {
    GalleryEntry e;
    e.name = name;
    const BoundedLattice& l = *lattice;
    const DualSemilattice d = lawson_dual(as_semilattice(lattice));
    const FinitePoset& dp = d.semilattice()->poset();
    for (Index i = 0; i < d.size(); ++i)
      e.dual_elements.push_back(dp.name(i) + " = " + set_text(l.poset(), d.filter(i)));
    for (const auto& [lo, hi] : dp.covers()) e.dual_covers.push_back(dp.name(lo) + " < " + dp.name(hi));

    if (!dp.top()) {
      e.iso_reason = "dual has no greatest element";
    } else if (find_isomorphism(dp, opposite(l.poset()))) {
      e.iso_to_opposite = true;
    } else {
      e.iso_reason = "no order isomorphism";
    }

    const LatticePtr op = std::make_shared<const BoundedLattice>(opposite(l));
    BoolMatrix table(l.size(), l.size());
    for (Index x = 0; x < l.size(); ++x)
      for (Index y = 0; y < l.size(); ++y) table.set(x, y, l.way_below(y, x));
    try {
      check_compatibility(std::move(table), as_semilattice(lattice), as_semilattice(op));
      e.compat_valid = true;
    } catch (const Error& err) {
      e.compat_clause = err.clause();
      if (err.witness().size() == 2) {
        e.witness_x = l.name(err.witness()[0]);
        e.witness_y = op_name(l, err.witness()[1]);
      }
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string GalleryReport::text() const {
  std::ostringstream o;
  for (const auto& e : entries) {
    o << e.name << "\n";
    o << "  dual:";
    for (const auto& s : e.dual_elements) o << "  " << s;
    o << "\n  dual order:";
    for (const auto& s : e.dual_covers) o << "  " << s;
    o << "\n  dual iso to opposite: " << (e.iso_to_opposite ? "true" : "false (" + e.iso_reason + ")")
      << "\n";
    o << "  [y << x] compatibility: ";
    if (e.compat_valid)
      o << "valid\n";
    else
      o << "fails axiom " << e.compat_clause << " at x=" << e.witness_x << ", y=" << e.witness_y
        << "\n";
  }
  return o.str();
}

}  // namespace ambrep::demos
