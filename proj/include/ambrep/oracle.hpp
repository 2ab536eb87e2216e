#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ambrep/compat.hpp"
#include "ambrep/crisp.hpp"
#include "ambrep/fuzzy.hpp"
#include "ambrep/order.hpp"

/// Brute-force reference implementations, written from the defining
/// quantifiers and sharing no code with the production paths. They are
/// exponential; each enforces a size cap and throws SizeCap beyond it.
namespace ambrep::oracle {

/// Outcome of comparing a production operation with its oracle.
/// `witness` is set exactly when `agree` is false.
struct OracleReport {
  std::string operation;
  std::string digest;
  bool agree = true;
  std::optional<std::string> witness;
};

/// Way-below by scanning every directed subset (the empty one included).
/// |P| ≤ 12.
BoolMatrix wb_oracle(const FinitePoset& poset);

/// Every proper Scott-open filter of S, found by scanning all subsets, in
/// increasing bitmask order. |S| ≤ 12.
std::vector<ElementSet> dual_oracle(const MeetSemilattice& s);

/// R^♯ from the defining formula: (ŷ, x̂) ∈ R^♯ iff every x with
/// xP1x̂ = 1 has some y ∈ xR with yP2ŷ = 1. Result Ŝ2 ⇒ Ŝ1.
CrispRep pinv_oracle(const CrispRep& r, const Compatibility& p1, const Compatibility& p2);
/// Over the canonical pairings.
CrispRep pinv_oracle(const CrispRep& r);

/// (ŷ, x̂, α) ∈ R^♯ iff for all β ≪ α and x with xP1x̂ = 1 there is
/// (y, β) ∈ xR with yP2ŷ = 1.
FuzzyRep fuzzy_pinv_oracle(const FuzzyRep& r, const Compatibility& p1, const Compatibility& p2);
FuzzyRep fuzzy_pinv_oracle(const FuzzyRep& r);

/// R ⊛ Q from the witness form: (x, z, α) is in iff for all z' ≪ z, α' ≪ α
/// some finite family (y_i, β_i, γ_i) with (x, y_i, β_i) ∈ R and
/// (y_i, z', γ_i) ∈ Q has β_1∗γ_1 ∨ … ∨ β_n∗γ_n ≥ α'. |S2|·|L| ≤ 256.
FuzzyRep compose_expanded(const FuzzyRep& r, const FuzzyRep& q, const Quantale& quantale);

/// All separating compatibilities S × S', by enumerating every table.
/// |S|·|S'| ≤ 16.
std::vector<Compatibility> search_separating(const SemilatticePtr& s, const SemilatticePtr& t);

/// Number of order isomorphisms S → T, by enumerating bijections. |S| ≤ 8.
std::size_t count_isomorphisms(const MeetSemilattice& s, const MeetSemilattice& t);

/// Lemma on cuts for R ⊆ P1 × P2 × P3: `relation_lower` is R lower in the
/// product order, `cuts_lower` is every one-dimensional cut lower. Bit
/// (a * |P2| + b) * |P3| + c. Witness: the offending triple (a, b, c) and
/// the smaller triple missing from R, if any.
struct CutsLemmaResult {
  bool relation_lower = true;
  bool cuts_lower = true;
  std::vector<Index> witness;
};
CutsLemmaResult cuts_lemma_check(const ElementSet& relation, const FinitePoset& p1,
                                 const FinitePoset& p2, const FinitePoset& p3);

/// Complete distributivity: ⋀_i ⋁ A_i = ⋁_f ⋀_i f(i) for every collection
/// of subsets. |L| ≤ 4.
Verdict cd_oracle(const BoundedLattice& lattice);

OracleReport check_way_below(const FinitePoset& poset);
OracleReport check_lawson_dual(const SemilatticePtr& s);
/// Compares the transpose path, the transversal path and the oracle.
OracleReport check_pseudo_inverse(const CrispRep& r);
/// Compares cutwise, shortcut and oracle.
OracleReport check_fuzzy_pseudo_inverse(const FuzzyRep& r);
/// Compares matrix product, closure route and witness form.
OracleReport check_compose_fuzzy(const FuzzyRep& r, const FuzzyRep& q, const Quantale& quantale);

/// Stable FNV-1a digest of element names and tables.
std::string digest(const MeetSemilattice& s);
std::string digest(const CrispRep& r);
std::string digest(const FuzzyRep& r);

}  // namespace ambrep::oracle
