#pragma once

#include <cstdint>
#include <string>

#include "ambrep/compat.hpp"
#include "ambrep/crisp.hpp"
#include "ambrep/dual.hpp"
#include "ambrep/fuzzy.hpp"

namespace ambrep {

struct GeneratorConfig {
  std::uint64_t seed = 42;
  std::size_t max_size = 6;
  std::size_t cases = 200;
  /// A catalog quantale name, or "mixed" to rotate through all of them.
  std::string quantale = "mixed";
  /// Probability of each seed pair when generating representations.
  double density = 0.25;
};

/// SplitMix64 stream keyed by (seed, case index), so every case draws the
/// same values no matter how cases are scheduled.
class CaseRng {
 public:
  CaseRng(std::uint64_t seed, std::uint64_t case_index);

  std::uint64_t next();
  /// Uniform in [0, n).
  std::size_t below(std::size_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p);

 private:
  std::uint64_t state_;
};

enum class PseudoInvertibility { Any, Required, Violated };

/// Intersection-closed family of subsets of a k-set (2 ≤ k ≤ 4) containing
/// ∅, ordered by inclusion; between 2 and max_size elements named e0, e1, …
/// in order of (cardinality, bitmask).
SemilatticePtr generate_semilattice(CaseRng& rng, std::size_t max_size);

/// Random seed pairs, then the least completion. `Required` keeps the 0-row
/// at {0₂}; `Violated` forces a non-zero pair into it (needs |S2| ≥ 2).
CrispRep generate_crisp_rep(CaseRng& rng, const SemilatticePtr& s1, const SemilatticePtr& s2,
                            double density, PseudoInvertibility mode = PseudoInvertibility::Any);

/// Random graded seeds (x, y, α), then the least completion
/// g(x, y) = ⋁{α | seed (x', y', α), x' ≤ x, y ≤ y'}, with g(x, 0₂) = 1.
FuzzyRep generate_fuzzy_rep(CaseRng& rng, const SemilatticePtr& s1, const SemilatticePtr& s2,
                            const LatticePtr& lattice, double density,
                            PseudoInvertibility mode = PseudoInvertibility::Any);

/// Random zero- and meet-preserving map; falls back to the constant-zero
/// map when the search budget runs out.
SemilatticeMorphism generate_morphism(CaseRng& rng, const SemilatticePtr& s1,
                                      const SemilatticePtr& s2);

/// A separating compatibility between S and a randomly relabeled copy of
/// S^∧ (elements w0, w1, …).
Compatibility generate_separating(CaseRng& rng, const SemilatticePtr& s);

/// Random subset with each element drawn with probability p.
ElementSet generate_subset(CaseRng& rng, std::size_t n, double p);

}  // namespace ambrep
