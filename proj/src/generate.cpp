#include "ambrep/generate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace ambrep {

CaseRng::CaseRng(std::uint64_t seed, std::uint64_t case_index)
    : state_(seed ^ (case_index + 1) * 0xD1B54A32D192ED03ull) {
  next();
}

std::uint64_t CaseRng::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::size_t CaseRng::below(std::size_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return static_cast<std::size_t>(v % n);
}

bool CaseRng::chance(double p) {
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

ElementSet generate_subset(CaseRng& rng, std::size_t n, double p) {
  ElementSet s(n);
  for (Index i = 0; i < n; ++i)
    if (rng.chance(p)) s.set(i);
  return s;
}

SemilatticePtr generate_semilattice(CaseRng& rng, std::size_t max_size) {
  max_size = std::max<std::size_t>(max_size, 2);
  const unsigned k = static_cast<unsigned>(rng.between(2, 4));
  const std::size_t target = rng.between(2, max_size);

  std::set<unsigned> family{0};
  for (int attempt = 0; attempt < 64 && family.size() < target; ++attempt) {
    std::set<unsigned> grown = family;
    grown.insert(static_cast<unsigned>(rng.below(std::size_t{1} << k)));
    for (bool changed = true; changed;) {
      changed = false;
      for (unsigned a : grown)
        for (unsigned b : grown)
          if (grown.insert(a & b).second) changed = true;
    }
    if (grown.size() <= max_size) family = std::move(grown);
  }
  if (family.size() < 2) family.insert(1);

  std::vector<unsigned> sets(family.begin(), family.end());
  std::sort(sets.begin(), sets.end(), [](unsigned a, unsigned b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  const std::size_t n = sets.size();
  std::vector<std::string> names;
  for (Index i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  BoolMatrix leq(n, n);
  std::vector<Index> meet(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if ((sets[a] & sets[b]) == sets[a]) leq.set(a, b);
      meet[a * n + b] = static_cast<Index>(
          std::find(sets.begin(), sets.end(), sets[a] & sets[b]) - sets.begin());
    }
  return std::make_shared<const MeetSemilattice>(
      FinitePoset::from_table(std::move(names), std::move(leq)), std::move(meet), 0);
}

CrispRep generate_crisp_rep(CaseRng& rng, const SemilatticePtr& s1, const SemilatticePtr& s2,
                            double density, PseudoInvertibility mode) {
  const Index z1 = s1->zero(), z2 = s2->zero();
  BoolMatrix seeds(s1->size(), s2->size());
  for (Index x = 0; x < s1->size(); ++x)
    for (Index y = 0; y < s2->size(); ++y)
      if (rng.chance(density) && !(x == z1 && mode == PseudoInvertibility::Required))
        seeds.set(x, y);
  if (mode == PseudoInvertibility::Violated && s2->size() > 1) {
    Index y = rng.below(s2->size() - 1);
    if (y >= z2) ++y;
    seeds.set(z1, y);
  }
  return complete_rep(seeds, s1, s2);
}

FuzzyRep generate_fuzzy_rep(CaseRng& rng, const SemilatticePtr& s1, const SemilatticePtr& s2,
                            const LatticePtr& lattice, double density, PseudoInvertibility mode) {
  const BoundedLattice& l = *lattice;
  const std::size_t n1 = s1->size(), n2 = s2->size();
  const Index z1 = s1->zero(), z2 = s2->zero();
  auto nonzero_level = [&] {
    Index a = rng.below(l.size() - 1);
    return a >= l.zero() ? a + 1 : a;
  };

  std::vector<Index> seed(n1 * n2, l.zero());
  for (Index x = 0; x < n1; ++x)
    for (Index y = 0; y < n2; ++y)
      if (rng.chance(density) && !(x == z1 && mode == PseudoInvertibility::Required))
        seed[x * n2 + y] = nonzero_level();
  if (mode == PseudoInvertibility::Violated && n2 > 1) {
    Index y = rng.below(n2 - 1);
    if (y >= z2) ++y;
    seed[z1 * n2 + y] = nonzero_level();
  }

  std::vector<Index> grade(n1 * n2, l.zero());
  for (Index x = 0; x < n1; ++x)
    for (Index y = 0; y < n2; ++y) {
      if (y == z2) {
        grade[x * n2 + y] = l.one();
        continue;
      }
      Index g = l.zero();
      for (Index x2 : members(s1->poset().down_set(x)))
        for (Index y2 : members(s2->poset().up_set(y))) g = l.join(g, seed[x2 * n2 + y2]);
      grade[x * n2 + y] = g;
    }
  return check_fuzzy_rep(std::move(grade), s1, s2, lattice);
}

SemilatticeMorphism generate_morphism(CaseRng& rng, const SemilatticePtr& s1,
                                      const SemilatticePtr& s2) {
  const MeetSemilattice& a = *s1;
  const MeetSemilattice& b = *s2;
  std::vector<Index> order(a.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index u, Index v) {
    return a.poset().down_set(u).count() < a.poset().down_set(v).count();
  });

  std::vector<Index> f(a.size());
  std::vector<bool> assigned(a.size(), false);
  int budget = 2000;

  std::function<bool(std::size_t)> place = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    if (--budget < 0) return false;
    const Index x = order[pos];
    std::vector<Index> candidates;
    if (x == a.zero()) {
      candidates.push_back(b.zero());
    } else {
      candidates.resize(b.size());
      std::iota(candidates.begin(), candidates.end(), Index{0});
      for (std::size_t i = candidates.size(); i > 1; --i)
        std::swap(candidates[i - 1], candidates[rng.below(i)]);
    }
    for (Index v : candidates) {
      bool ok = true;
      for (Index u = 0; u < a.size() && ok; ++u) {
        if (!assigned[u]) continue;
        const Index m = a.meet(x, u);
        const Index fm = m == x ? v : f[m];
        if (m != x && !assigned[m]) continue;
        ok = fm == b.meet(v, f[u]);
      }
      if (!ok) continue;
      f[x] = v;
      assigned[x] = true;
      if (place(pos + 1)) return true;
      assigned[x] = false;
    }
    return false;
  };

  if (place(0) && check_morphism(a, b, f)) return SemilatticeMorphism(s1, s2, std::move(f));
  return constant_zero(s1, s2);
}

Compatibility generate_separating(CaseRng& rng, const SemilatticePtr& s) {
  const DualSemilattice d = lawson_dual(s);
  const MeetSemilattice& ds = *d.semilattice();
  const std::size_t n = ds.size();
  std::vector<Index> perm(n);  // dual element i becomes relabeled element perm[i]
  std::iota(perm.begin(), perm.end(), Index{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

  std::vector<std::string> names(n);
  for (Index i = 0; i < n; ++i) names[i] = "w" + std::to_string(i);
  BoolMatrix leq(n, n);
  std::vector<Index> meet(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      leq.set(perm[i], perm[j], ds.leq(i, j));
      meet[perm[i] * n + perm[j]] = perm[ds.meet(i, j)];
    }
  auto copy = std::make_shared<const MeetSemilattice>(
      FinitePoset::from_table(std::move(names), std::move(leq)), std::move(meet),
      perm[ds.zero()]);

  BoolMatrix table(s->size(), n);
  for (Index i = 0; i < n; ++i)
    for (Index x : members(d.filter(i))) table.set(x, perm[i]);
  return check_compatibility(std::move(table), s, std::move(copy));
}

}  // namespace ambrep
