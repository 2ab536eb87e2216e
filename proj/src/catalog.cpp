#include "ambrep/catalog.hpp"

namespace ambrep::catalog {

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

FinitePoset poset(std::vector<std::string> names, const Pairs& less) {
  return FinitePoset::from_pairs(std::move(names), less);
}

}  // namespace

FinitePoset chain(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::EmptyCarrier, "chains have at least two elements");
  std::vector<std::string> names{"0"};
  if (n == 3) {
    names.push_back("m");
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i) names.push_back("c" + std::to_string(i));
  }
  names.push_back("1");
  Pairs less;
  for (std::size_t i = 0; i + 1 < n; ++i) less.emplace_back(names[i], names[i + 1]);
  return poset(std::move(names), less);
}

FinitePoset diamond() {
  return poset({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

FinitePoset vee() { return poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}); }

FinitePoset m3() {
  return poset({"0", "a", "b", "c", "1"},
               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FinitePoset boolean8() {
  return poset({"0", "a", "b", "c", "ab", "ac", "bc", "1"},
               {{"0", "a"},
                {"0", "b"},
                {"0", "c"},
                {"a", "ab"},
                {"a", "ac"},
                {"b", "ab"},
                {"b", "bc"},
                {"c", "ac"},
                {"c", "bc"},
                {"ab", "1"},
                {"ac", "1"},
                {"bc", "1"}});
}

std::vector<NamedLattice> gallery() {
  std::vector<NamedLattice> out;
  for (std::size_t n = 2; n <= 5; ++n)
    out.push_back({"C" + std::to_string(n), make_lattice(chain(n))});
  out.push_back({"D4", make_lattice(diamond())});
  out.push_back({"M3", make_lattice(m3())});
  out.push_back({"B8", make_lattice(boolean8())});
  return out;
}

std::vector<NamedSemilattice> semilattices() {
  std::vector<NamedSemilattice> out;
  for (const auto& [name, l] : gallery()) out.push_back({name, as_semilattice(l)});
  out.push_back({"V3", make_semilattice(vee())});
  return out;
}

Index segment_index(std::size_t n, std::size_t i, std::size_t j) {
  // Segments are listed by left end, then right end.
  Index k = 0;
  for (std::size_t a = 0; a < i; ++a) k += n + 1 - a;
  return k + (j - i);
}

SemilatticePtr segments(std::size_t n) {
  if (n == 0 || n % 6 != 0)
    throw Error(ErrorKind::BadGrid, "segment grid must be a positive multiple of 6");
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> seg;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      names.push_back("s" + std::to_string(i) + "_" + std::to_string(j));
      seg.emplace_back(i, j);
    }
  const std::size_t m = seg.size();
  BoolMatrix leq(m, m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      if (seg[a].first <= seg[b].first && seg[b].second <= seg[a].second) leq.set(a, b);
  FinitePoset p = FinitePoset::from_table(std::move(names), std::move(leq));
  std::vector<Index> meet(m * m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      meet[a * m + b] = segment_index(n, std::min(seg[a].first, seg[b].first),
                                      std::max(seg[a].second, seg[b].second));
  return std::make_shared<const MeetSemilattice>(std::move(p), std::move(meet),
                                                 segment_index(n, 0, n));
}

Quantale rel2() {
  // Bit k of an element encodes pair k in the order (0,0), (0,1), (1,0), (1,1).
  auto bit = [](int i, int j) { return 2 * i + j; };
  std::vector<std::string> names;
  for (unsigned m = 0; m < 16; ++m) {
    std::string s = "r";
    for (int k = 0; k < 4; ++k) s += (m >> k & 1) ? '1' : '0';
    names.push_back(s);
  }
  BoolMatrix leq(16, 16);
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b)
      if ((a & b) == a) leq.set(a, b);
  auto lattice = make_lattice(FinitePoset::from_table(std::move(names), std::move(leq)));
  std::vector<Index> mul(256);
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b) {
      unsigned c = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k)
            if ((a >> bit(i, j) & 1) && (b >> bit(j, k) & 1)) c |= 1u << bit(i, k);
      mul[a * 16 + b] = c;
    }
  return check_quantale(std::move(lattice), std::move(mul));
}

Quantale lukasiewicz(std::size_t n) {
  auto lattice = make_lattice(chain(n));
  std::vector<Index> mul(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) mul[a * n + b] = a + b >= n - 1 ? a + b - (n - 1) : 0;
  return check_quantale(std::move(lattice), std::move(mul));
}

std::vector<NamedQuantale> quantales() {
  return {{"c3", meet_quantale(make_lattice(chain(3)))},
          {"d4", meet_quantale(make_lattice(diamond()))},
          {"rel2", rel2()},
          {"luk4", lukasiewicz(4)}};
}

Quantale quantale(const std::string& name) {
  for (auto& q : quantales())
    if (q.name == name) return q.quantale;
  throw Error(ErrorKind::UnknownElement, "unknown quantale '" + name + "'");
}

}  // namespace ambrep::catalog
