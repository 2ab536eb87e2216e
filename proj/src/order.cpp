#include "ambrep/order.hpp"

#include <algorithm>
#include <functional>

namespace ambrep {

ElementSet make_set(std::size_t size, std::initializer_list<Index> members) {
  ElementSet set(size);
  for (Index m : members) set.set(m);
  return set;
}

std::vector<Index> members(const ElementSet& set) {
  std::vector<Index> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols, bool value)
    : data_(rows, ElementSet(cols)), cols_(cols) {
  if (value)
    for (auto& r : data_) r.set();
}

ElementSet BoolMatrix::column(Index c) const {
  ElementSet out(rows());
  for (Index r = 0; r < rows(); ++r)
    if (data_[r].test(c)) out.set(r);
  return out;
}

BoolMatrix BoolMatrix::transposed() const {
  BoolMatrix out(cols_, rows());
  for (Index r = 0; r < rows(); ++r)
    for (auto c = data_[r].find_first(); c != ElementSet::npos; c = data_[r].find_next(c))
      out.set(c, r);
  return out;
}

std::size_t BoolMatrix::count() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.count();
  return n;
}

bool BoolMatrix::subset_of(const BoolMatrix& other) const {
  if (rows() != other.rows() || cols() != other.cols()) return false;
  for (Index r = 0; r < rows(); ++r)
    if (!data_[r].is_subset_of(other.data_[r])) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::unordered_map<std::string, Index> index_names(const std::vector<std::string>& names) {
  if (names.empty()) throw Error(ErrorKind::EmptyCarrier, "poset has no elements");
  std::unordered_map<std::string, Index> index;
  for (Index i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second)
      throw Error(ErrorKind::DuplicateElement, "duplicate element '" + names[i] + "'", {}, {i});
  }
  return index;
}

}  // namespace

FinitePoset FinitePoset::from_pairs(std::vector<std::string> names,
                                    std::span<const std::pair<std::string, std::string>> less) {
  auto index = index_names(names);
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(less.size());
  for (const auto& [a, b] : less) {
    auto ia = index.find(a);
    if (ia == index.end()) throw Error(ErrorKind::UnknownElement, "unknown element '" + a + "'");
    auto ib = index.find(b);
    if (ib == index.end()) throw Error(ErrorKind::UnknownElement, "unknown element '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_index_pairs(std::move(names), pairs);
}

FinitePoset FinitePoset::from_index_pairs(std::vector<std::string> names,
                                          std::span<const std::pair<Index, Index>> less) {
  const std::size_t n = names.size();
  auto index = index_names(names);
  BoolMatrix up(n, n);
  for (Index i = 0; i < n; ++i) up.set(i, i);
  for (const auto& [a, b] : less) {
    if (a >= n || b >= n) throw Error(ErrorKind::UnknownElement, "element index out of range");
    up.set(a, b);
  }
  // Warshall over bit rows.
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      if (up.test(i, k)) up.row(i) |= up.row(k);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (up.test(i, j) && up.test(j, i))
        throw Error(ErrorKind::CycleDetected,
                    "'" + names[i] + "' and '" + names[j] + "' lie on a cycle", {}, {i, j});
  FinitePoset p;
  p.names_ = std::move(names);
  p.index_ = std::move(index);
  p.up_ = std::move(up);
  p.finish();
  return p;
}

FinitePoset FinitePoset::from_table(std::vector<std::string> names, BoolMatrix leq) {
  const std::size_t n = names.size();
  auto index = index_names(names);
  if (leq.rows() != n || leq.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "order table does not match element count");
  for (Index i = 0; i < n; ++i) {
    if (!leq.test(i, i))
      throw Error(ErrorKind::CycleDetected, "order is not reflexive at '" + names[i] + "'", {}, {i});
    for (Index j = 0; j < n; ++j) {
      if (i != j && leq.test(i, j) && leq.test(j, i))
        throw Error(ErrorKind::CycleDetected,
                    "'" + names[i] + "' and '" + names[j] + "' lie on a cycle", {}, {i, j});
      if (leq.test(i, j) && !leq.row(j).is_subset_of(leq.row(i)))
        throw Error(ErrorKind::CycleDetected, "order is not transitive", {}, {i, j});
    }
  }
  FinitePoset p;
  p.names_ = std::move(names);
  p.index_ = std::move(index);
  p.up_ = std::move(leq);
  p.finish();
  return p;
}

void FinitePoset::finish() {
  const std::size_t n = names_.size();
  down_ = up_.transposed();
  bottom_.reset();
  top_.reset();
  for (Index i = 0; i < n; ++i) {
    if (up_.row(i).all()) bottom_ = i;
    if (down_.row(i).all()) top_ = i;
  }
  wb_ = ambrep::way_below(*this);
}

std::optional<Index> FinitePoset::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Index, Index>> FinitePoset::covers() const {
  std::vector<std::pair<Index, Index>> out;
  const std::size_t n = size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      // a < b is a cover when no c sits strictly between.
      ElementSet between = up_.row(a) & down_.row(b);
      if (between.count() == 2) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Index> FinitePoset::minimal(const ElementSet& set) const {
  std::vector<Index> out;
  for (Index a : members(set)) {
    ElementSet below = down_.row(a) & set;
    if (below.count() == 1) out.push_back(a);
  }
  return out;
}

std::vector<Index> FinitePoset::maximal(const ElementSet& set) const {
  std::vector<Index> out;
  for (Index a : members(set)) {
    ElementSet above = up_.row(a) & set;
    if (above.count() == 1) out.push_back(a);
  }
  return out;
}

std::optional<Index> FinitePoset::least(const ElementSet& set) const {
  for (Index a : members(set))
    if (set.is_subset_of(up_.row(a))) return a;
  return std::nullopt;
}

std::optional<Index> FinitePoset::greatest(const ElementSet& set) const {
  for (Index a : members(set))
    if (set.is_subset_of(down_.row(a))) return a;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Index BoundedLattice::join_of(const ElementSet& set) const {
  Index acc = zero();
  for (Index a : members(set)) acc = join(acc, a);
  return acc;
}

SemilatticePtr as_semilattice(const LatticePtr& lattice) {
  return SemilatticePtr(lattice, &lattice->semilattice());
}

bool same_semilattice(const SemilatticePtr& a, const SemilatticePtr& b) {
  return a == b || (a && b && *a == *b);
}

FinitePoset validate_poset(std::vector<std::string> names,
                           std::span<const std::pair<std::string, std::string>> less) {
  return FinitePoset::from_pairs(std::move(names), less);
}

std::optional<Index> glb(const FinitePoset& poset, Index a, Index b) {
  return poset.greatest(poset.down_set(a) & poset.down_set(b));
}

std::optional<Index> lub(const FinitePoset& poset, Index a, Index b) {
  return poset.least(poset.up_set(a) & poset.up_set(b));
}

MeetSemilattice meet_structure(const FinitePoset& poset) {
  const std::size_t n = poset.size();
  std::vector<Index> meet(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      auto m = glb(poset, a, b);
      if (!m) {
        std::string msg = "'" + poset.name(a) + "' and '" + poset.name(b) + "' have no meet";
        if (!poset.bottom()) msg += " (and the poset has no bottom)";
        throw Error(ErrorKind::NoMeet, msg, {}, {a, b});
      }
      meet[a * n + b] = meet[b * n + a] = *m;
    }
  }
  if (!poset.bottom()) throw Error(ErrorKind::NoBottom, "poset has no bottom element");
  return MeetSemilattice(poset, std::move(meet), *poset.bottom());
}

BoundedLattice lattice_structure(const FinitePoset& poset) {
  MeetSemilattice semi = meet_structure(poset);
  const std::size_t n = poset.size();
  std::vector<Index> join(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a; b < n; ++b) {
      auto j = lub(poset, a, b);
      if (!j)
        throw Error(ErrorKind::NoJoin,
                    "'" + poset.name(a) + "' and '" + poset.name(b) + "' have no join", {}, {a, b});
      join[a * n + b] = join[b * n + a] = *j;
    }
  }
  if (!poset.top()) throw Error(ErrorKind::NoTop, "poset has no top element");
  return BoundedLattice(std::move(semi), std::move(join), *poset.top());
}

SemilatticePtr make_semilattice(const FinitePoset& poset) {
  return std::make_shared<const MeetSemilattice>(meet_structure(poset));
}

LatticePtr make_lattice(const FinitePoset& poset) {
  return std::make_shared<const BoundedLattice>(lattice_structure(poset));
}

BoolMatrix way_below(const FinitePoset& poset) {
  BoolMatrix wb = poset.order();
  if (auto bot = poset.bottom())
    for (Index x = 0; x < poset.size(); ++x) wb.set(x, *bot, false);
  return wb;
}

ElementSet scott_closure(const FinitePoset& poset, const ElementSet& set) {
  ElementSet out(poset.size());
  for (Index a : members(set)) out |= poset.down_set(a);
  if (poset.bottom()) out.set(*poset.bottom());
  return out;
}

ElementSet upper_closure(const FinitePoset& poset, const ElementSet& set) {
  ElementSet out(poset.size());
  for (Index a : members(set)) out |= poset.up_set(a);
  return out;
}

bool is_lower(const FinitePoset& poset, const ElementSet& set) {
  for (Index a : members(set))
    if (!poset.down_set(a).is_subset_of(set)) return false;
  return true;
}

bool is_upper(const FinitePoset& poset, const ElementSet& set) {
  for (Index a : members(set))
    if (!poset.up_set(a).is_subset_of(set)) return false;
  return true;
}

bool is_directed(const FinitePoset& poset, const ElementSet& set) {
  const auto m = members(set);
  for (Index a : m)
    for (Index b : m)
      if (!(poset.up_set(a) & poset.up_set(b)).intersects(set)) return false;
  return true;
}

bool is_filtered(const FinitePoset& poset, const ElementSet& set) {
  const auto m = members(set);
  for (Index a : m)
    for (Index b : m)
      if (!(poset.down_set(a) & poset.down_set(b)).intersects(set)) return false;
  return true;
}

bool is_filter(const MeetSemilattice& semilattice, const ElementSet& set) {
  if (!is_upper(semilattice.poset(), set)) return false;
  const auto m = members(set);
  for (Index a : m)
    for (Index b : m)
      if (!set.test(semilattice.meet(a, b))) return false;
  return true;
}

Verdict check_distributive(const BoundedLattice& lattice) {
  const std::size_t n = lattice.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        Index lhs = lattice.meet(x, lattice.join(y, z));
        Index rhs = lattice.join(lattice.meet(x, y), lattice.meet(x, z));
        if (lhs != rhs)
          return Verdict::no({x, y, z}, "x∧(y∨z) ≠ (x∧y)∨(x∧z) at x=" + lattice.name(x) +
                                            ", y=" + lattice.name(y) + ", z=" + lattice.name(z));
      }
  return Verdict::yes();
}

FinitePoset opposite(const FinitePoset& poset) {
  return FinitePoset::from_table(poset.names(), poset.order().transposed());
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
  const std::size_t np = p.size(), nq = q.size(), n = np * nq;
  std::vector<std::string> names;
  names.reserve(n);
  for (Index a = 0; a < np; ++a)
    for (Index b = 0; b < nq; ++b) names.push_back("(" + p.name(a) + "," + q.name(b) + ")");
  BoolMatrix leq(n, n);
  for (Index a = 0; a < np; ++a)
    for (Index b = 0; b < nq; ++b)
      for (Index c = 0; c < np; ++c)
        for (Index d = 0; d < nq; ++d)
          if (p.leq(a, c) && q.leq(b, d)) leq.set(a * nq + b, c * nq + d);
  return FinitePoset::from_table(std::move(names), std::move(leq));
}

BoundedLattice opposite(const BoundedLattice& lattice) {
  const std::size_t n = lattice.size();
  FinitePoset op = opposite(lattice.poset());
  std::vector<Index> meet(n * n), join(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      meet[a * n + b] = lattice.join(a, b);
      join[a * n + b] = lattice.meet(a, b);
    }
  return BoundedLattice(MeetSemilattice(std::move(op), std::move(meet), lattice.one()),
                        std::move(join), lattice.zero());
}

std::optional<std::vector<Index>> find_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  // Elements are matched only against candidates with equal up/down counts.
  auto signature = [](const FinitePoset& p, Index i) {
    return std::pair{p.up_set(i).count(), p.down_set(i).count()};
  };
  std::vector<Index> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(Index)> extend = [&](Index i) -> bool {
    if (i == n) return true;
    for (Index c = 0; c < n; ++c) {
      if (used[c] || signature(a, i) != signature(b, c)) continue;
      bool ok = true;
      for (Index j = 0; j < i && ok; ++j)
        ok = a.leq(i, j) == b.leq(c, image[j]) && a.leq(j, i) == b.leq(image[j], c);
      if (!ok) continue;
      image[i] = c;
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace ambrep
