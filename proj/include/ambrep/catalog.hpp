#pragma once

#include <string>
#include <vector>

#include "ambrep/crisp.hpp"
#include "ambrep/fuzzy.hpp"
#include "ambrep/order.hpp"

/// Named standard objects.
namespace ambrep::catalog {

/// Chain with n ≥ 2 elements: "0","1" / "0","m","1" / "0","c1",…,"c(n-2)","1".
FinitePoset chain(std::size_t n);
/// 0 < a, b < 1.
FinitePoset diamond();
/// 0 < a, b (no top).
FinitePoset vee();
/// 0 < a, b, c < 1.
FinitePoset m3();
/// Subsets of {a, b, c}: 0, a, b, c, ab, ac, bc, 1.
FinitePoset boolean8();

struct NamedLattice {
  std::string name;
  LatticePtr lattice;
};

/// C2, C3, C4, C5, D4, M3, B8 in that order.
std::vector<NamedLattice> gallery();

struct NamedSemilattice {
  std::string name;
  SemilatticePtr semilattice;
};

/// The gallery plus V3, all as semilattices.
std::vector<NamedSemilattice> semilattices();

/// Non-empty segments [i/n, j/n] of the grid on [0,1], ordered by reverse
/// inclusion (so [0,1] is the zero and the meet is the convex hull).
/// Element names "s<i>_<j>". Throws BadGrid unless n is a positive multiple
/// of 6.
SemilatticePtr segments(std::size_t n);
/// Index of [i/n, j/n] in segments(n).
Index segment_index(std::size_t n, std::size_t i, std::size_t j);

/// The Boolean lattice of binary relations on {0, 1} under relational
/// composition. Element names "r" followed by the membership bits of
/// (0,0), (0,1), (1,0), (1,1); the unit is r1001.
Quantale rel2();

/// Łukasiewicz product on the n-element chain: a ∗ b = max(0, a + b − (n−1)).
Quantale lukasiewicz(std::size_t n);

struct NamedQuantale {
  std::string name;
  Quantale quantale;
};

/// "c3" (meet on C3), "d4" (meet on D4), "rel2", "luk4".
std::vector<NamedQuantale> quantales();

/// Looks up one of quantales() by name. Throws UnknownElement.
Quantale quantale(const std::string& name);

}  // namespace ambrep::catalog
