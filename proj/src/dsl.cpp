#include "ambrep/dsl.hpp"

#include <array>
#include <map>
#include <optional>
#include <sstream>

namespace ambrep::dsl {

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Name, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '^' || c == '\'' || c == '.';
}

std::vector<Token> lex(std::string_view src) {
  static const char* const puncts[] = {"|->", "|>", "->", "=>", "{", "}", ";", ":",
                                       ",",   "<",  "(",  ")",  "="};
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const SourcePos pos{line, col};
    if (name_char(c)) {
      std::size_t j = i;
      while (j < src.size() && name_char(src[j])) ++j;
      out.push_back({Tok::Name, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const char* p : puncts) {
      std::string_view pv(p);
      if (src.substr(i, pv.size()) == pv) {
        out.push_back({Tok::Punct, std::string(pv), pos});
        advance(pv.size());
        matched = true;
        break;
      }
    }
    if (!matched) {
      std::size_t len = 1;  // whole UTF-8 sequence
      while (i + len < src.size() && (static_cast<unsigned char>(src[i + len]) & 0xC0) == 0x80) ++len;
      throw SourceError(ErrorKind::ParseError, pos,
                        "unexpected character '" + std::string(src.substr(i, len)) + "'",
                        "a name or punctuation");
    }
  }
  out.push_back({Tok::End, "", SourcePos{line, col}});
  return out;
}

// ---------------------------------------------------------------- syntax

struct RawPoset {
  Token name;
  std::vector<Token> elements;
  std::vector<std::pair<Token, Token>> order;
  Span span;
};

struct RawMap {
  Token name, source, target;
  std::vector<std::pair<Token, Token>> entries;
  Span span;
};

struct RawRep {
  Token name, source, target;
  std::vector<std::pair<Token, Token>> pairs;
  Span span;
};

struct RawFuzzy {
  Token name, source, target, lattice;
  std::vector<std::array<Token, 3>> entries;
  Span span;
};

struct RawQuantale {
  Token name, lattice;
  std::vector<std::array<Token, 3>> entries;
  Span span;
};

using RawItem = std::variant<RawPoset, RawMap, RawRep, RawFuzzy, RawQuantale>;

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<RawItem> file() {
    std::vector<RawItem> items;
    while (peek().kind != Tok::End) {
      const Token& kw = peek();
      if (kw.kind == Tok::Name && kw.text == "poset")
        items.emplace_back(poset());
      else if (kw.kind == Tok::Name && kw.text == "map")
        items.emplace_back(map());
      else if (kw.kind == Tok::Name && kw.text == "rep")
        items.emplace_back(rep());
      else if (kw.kind == Tok::Name && kw.text == "fuzzyrep")
        items.emplace_back(fuzzy());
      else if (kw.kind == Tok::Name && kw.text == "quantale")
        items.emplace_back(quantale());
      else
        fail("one of poset, map, rep, fuzzyrep, quantale");
    }
    return items;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(std::string_view punct) const {
    return peek().kind == Tok::Punct && peek().text == punct;
  }
  bool at_name(std::string_view word) const {
    return peek().kind == Tok::Name && peek().text == word;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SourceError(ErrorKind::ParseError, peek().pos,
                      "expected " + expected + ", found " + describe(peek()), expected);
  }

  Token expect(std::string_view punct) {
    if (!at(punct)) fail("'" + std::string(punct) + "'");
    return toks_[pos_++];
  }
  Token keyword(std::string_view word) {
    if (!at_name(word)) fail("'" + std::string(word) + "'");
    return toks_[pos_++];
  }
  Token name() {
    if (peek().kind != Tok::Name) fail("a name");
    return toks_[pos_++];
  }
  SourcePos end_pos() const { return toks_[pos_ - 1].pos; }

  RawPoset poset() {
    RawPoset p;
    p.span.begin = keyword("poset").pos;
    p.name = name();
    expect("{");
    keyword("elements");
    expect(":");
    p.elements.push_back(name());
    while (peek().kind == Tok::Name) p.elements.push_back(name());
    expect(";");
    if (at_name("order")) {
      ++pos_;
      expect(":");
      do {
        Token a = name();
        expect("<");
        Token b = name();
        p.order.emplace_back(std::move(a), std::move(b));
      } while (at(",") && (++pos_, true));
      expect(";");
    }
    expect("}");
    p.span.end = end_pos();
    return p;
  }

  RawMap map() {
    RawMap m;
    m.span.begin = keyword("map").pos;
    m.name = name();
    expect(":");
    m.source = name();
    expect("->");
    m.target = name();
    expect("{");
    while (!at("}")) {
      Token x = name();
      expect("|->");
      Token y = name();
      expect(";");
      m.entries.emplace_back(std::move(x), std::move(y));
    }
    expect("}");
    m.span.end = end_pos();
    return m;
  }

  RawRep rep() {
    RawRep r;
    r.span.begin = keyword("rep").pos;
    r.name = name();
    expect(":");
    r.source = name();
    expect("=>");
    r.target = name();
    expect("{");
    while (!at("}")) {
      Token x = name();
      expect("|>");
      Token y = name();
      expect(";");
      r.pairs.emplace_back(std::move(x), std::move(y));
    }
    expect("}");
    r.span.end = end_pos();
    return r;
  }

  RawFuzzy fuzzy() {
    RawFuzzy f;
    f.span.begin = keyword("fuzzyrep").pos;
    f.name = name();
    expect(":");
    f.source = name();
    expect("=>");
    f.target = name();
    keyword("over");
    f.lattice = name();
    expect("{");
    while (!at("}")) {
      expect("(");
      Token x = name();
      expect(",");
      Token y = name();
      expect(")");
      expect("=");
      Token a = name();
      expect(";");
      f.entries.push_back({std::move(x), std::move(y), std::move(a)});
    }
    expect("}");
    f.span.end = end_pos();
    return f;
  }

  RawQuantale quantale() {
    RawQuantale q;
    q.span.begin = keyword("quantale").pos;
    q.name = name();
    keyword("over");
    q.lattice = name();
    expect("{");
    while (!at("}")) {
      keyword("mul");
      expect("(");
      Token a = name();
      expect(",");
      Token b = name();
      expect(")");
      expect("=");
      Token c = name();
      expect(";");
      q.entries.push_back({std::move(a), std::move(b), std::move(c)});
    }
    expect("}");
    q.span.end = end_pos();
    return q;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- resolution

[[noreturn]] void resolve_fail(const Token& at, const std::string& message,
                               std::optional<ErrorKind> cause = std::nullopt) {
  throw SourceError(ErrorKind::ResolveError, at.pos, message, {}, cause);
}

[[noreturn]] void resolve_fail(const Token& at, const Error& e) {
  throw SourceError(ErrorKind::ResolveError, at.pos, e.what(), {}, e.kind());
}

class Resolver {
 public:
  Resolver(const ParseOptions& options) : options_(options) {}

  Document run(const std::vector<RawItem>& raw) {
    std::map<std::string, bool> seen;
    for (const auto& r : raw) {
      const Token& n = std::visit([](const auto& x) -> const Token& { return x.name; }, r);
      if (!seen.emplace(n.text, true).second)
        resolve_fail(n, "duplicate definition '" + n.text + "'", ErrorKind::DuplicateElement);
    }
    for (const auto& r : raw)
      if (auto* p = std::get_if<RawPoset>(&r)) posets_.emplace(p->name.text, resolve(*p));

    Document doc;
    for (const auto& r : raw) {
      if (auto* p = std::get_if<RawPoset>(&r)) {
        doc.add(PosetItem{p->name.text, posets_.at(p->name.text), p->span});
      } else if (auto* m = std::get_if<RawMap>(&r)) {
        doc.add(resolve(*m));
      } else if (auto* q = std::get_if<RawRep>(&r)) {
        doc.add(resolve(*q));
      } else if (auto* f = std::get_if<RawFuzzy>(&r)) {
        doc.add(resolve(*f));
      } else {
        doc.add(resolve(std::get<RawQuantale>(r)));
      }
    }
    return doc;
  }

 private:
  FinitePoset resolve(const RawPoset& p) {
    std::vector<std::string> names;
    std::map<std::string, Index> index;
    for (const auto& e : p.elements) {
      if (!index.emplace(e.text, names.size()).second)
        resolve_fail(e, "duplicate element '" + e.text + "'", ErrorKind::DuplicateElement);
      names.push_back(e.text);
    }
    std::vector<std::pair<Index, Index>> less;
    for (const auto& [a, b] : p.order) {
      auto ia = index.find(a.text);
      if (ia == index.end())
        resolve_fail(a, "unknown element '" + a.text + "' in poset " + p.name.text,
                     ErrorKind::UnknownElement);
      auto ib = index.find(b.text);
      if (ib == index.end())
        resolve_fail(b, "unknown element '" + b.text + "' in poset " + p.name.text,
                     ErrorKind::UnknownElement);
      less.emplace_back(ia->second, ib->second);
    }
    try {
      return FinitePoset::from_index_pairs(std::move(names), less);
    } catch (const Error& e) {
      resolve_fail(p.name, e);
    }
  }

  const FinitePoset& poset(const Token& t) {
    auto it = posets_.find(t.text);
    if (it == posets_.end())
      resolve_fail(t, "unknown poset '" + t.text + "'", ErrorKind::UnknownElement);
    return it->second;
  }

  SemilatticePtr semilattice(const Token& t) {
    if (auto it = semis_.find(t.text); it != semis_.end()) return it->second;
    const FinitePoset& p = poset(t);
    try {
      return semis_[t.text] = make_semilattice(p);
    } catch (const Error& e) {
      resolve_fail(t, e);
    }
  }

  LatticePtr lattice(const Token& t) {
    if (auto it = lattices_.find(t.text); it != lattices_.end()) return it->second;
    const FinitePoset& p = poset(t);
    try {
      return lattices_[t.text] = make_lattice(p);
    } catch (const Error& e) {
      resolve_fail(t, e);
    }
  }

  static Index element(const MeetSemilattice& s, const Token& t, const std::string& where) {
    auto i = s.poset().index_of(t.text);
    if (!i) resolve_fail(t, "unknown element '" + t.text + "' in " + where, ErrorKind::UnknownElement);
    return *i;
  }
  static Index element(const BoundedLattice& l, const Token& t, const std::string& where) {
    return element(l.semilattice(), t, where);
  }

  MapItem resolve(const RawMap& m) {
    SemilatticePtr s = semilattice(m.source);
    SemilatticePtr t = semilattice(m.target);
    std::vector<Index> table(s->size(), t->zero());
    std::vector<bool> given(s->size(), false);
    for (const auto& [x, y] : m.entries) {
      const Index i = element(*s, x, m.source.text);
      const Index j = element(*t, y, m.target.text);
      if (given[i] && table[i] != j)
        resolve_fail(x, "conflicting entries for '" + x.text + "'", ErrorKind::NotMorphism);
      given[i] = true;
      table[i] = j;
    }
    try {
      return MapItem{m.name.text, m.source.text, m.target.text,
                     SemilatticeMorphism(s, t, std::move(table)), m.span};
    } catch (const Error& e) {
      resolve_fail(m.name, e);
    }
  }

  RepItem resolve(const RawRep& r) {
    SemilatticePtr s1 = semilattice(r.source);
    SemilatticePtr s2 = semilattice(r.target);
    BoolMatrix table(s1->size(), s2->size());
    for (const auto& [x, y] : r.pairs)
      table.set(element(*s1, x, r.source.text), element(*s2, y, r.target.text));
    try {
      if (options_.normalize)
        return RepItem{r.name.text, r.source.text, r.target.text, complete_rep(table, s1, s2),
                       r.span};
      for (Index x = 0; x < s1->size(); ++x) table.set(x, s2->zero());
      return RepItem{r.name.text, r.source.text, r.target.text,
                     check_rep(std::move(table), s1, s2), r.span};
    } catch (const Error& e) {
      resolve_fail(r.name, e);
    }
  }

  FuzzyRepItem resolve(const RawFuzzy& f) {
    SemilatticePtr s1 = semilattice(f.source);
    SemilatticePtr s2 = semilattice(f.target);
    LatticePtr l = lattice(f.lattice);
    const std::size_t n2 = s2->size();
    std::vector<Index> grade(s1->size() * n2, l->zero());
    std::vector<bool> given(grade.size(), false);
    for (const auto& [x, y, a] : f.entries) {
      const Index i = element(*s1, x, f.source.text);
      const Index j = element(*s2, y, f.target.text);
      const Index v = element(*l, a, f.lattice.text);
      const Index k = i * n2 + j;
      if (given[k] && grade[k] != v)
        resolve_fail(x, "conflicting grades for (" + x.text + ", " + y.text + ")",
                     ErrorKind::FuzzyRepViolated);
      given[k] = true;
      grade[k] = v;
    }
    try {
      if (options_.normalize) {
        std::vector<Index> closed(grade.size(), l->zero());
        for (Index x = 0; x < s1->size(); ++x)
          for (Index y = 0; y < n2; ++y) {
            Index g = y == s2->zero() ? l->one() : l->zero();
            for (Index x2 : members(s1->poset().down_set(x)))
              for (Index y2 : members(s2->poset().up_set(y))) g = l->join(g, grade[x2 * n2 + y2]);
            closed[x * n2 + y] = g;
          }
        grade = std::move(closed);
      } else {
        for (Index x = 0; x < s1->size(); ++x) {
          Index& g = grade[x * n2 + s2->zero()];
          if (given[x * n2 + s2->zero()] && g != l->one())
            throw Error(ErrorKind::FuzzyRepViolated,
                        "grade at (" + s1->name(x) + ", " + s2->name(s2->zero()) + ") must be 1",
                        "zero-column", {x, s2->zero()});
          g = l->one();
        }
      }
      return FuzzyRepItem{f.name.text, f.source.text, f.target.text, f.lattice.text,
                          check_fuzzy_rep(std::move(grade), s1, s2, l), f.span};
    } catch (const Error& e) {
      resolve_fail(f.name, e);
    }
  }

  QuantaleItem resolve(const RawQuantale& q) {
    LatticePtr l = lattice(q.lattice);
    const std::size_t n = l->size();
    std::vector<Index> mul(n * n, l->zero());
    std::vector<bool> given(n * n, false);
    for (const auto& [a, b, c] : q.entries) {
      const Index k = element(*l, a, q.lattice.text) * n + element(*l, b, q.lattice.text);
      const Index v = element(*l, c, q.lattice.text);
      if (given[k] && mul[k] != v)
        resolve_fail(a, "conflicting products for (" + a.text + ", " + b.text + ")",
                     ErrorKind::QuantaleViolated);
      given[k] = true;
      mul[k] = v;
    }
    try {
      return QuantaleItem{q.name.text, q.lattice.text, check_quantale(l, std::move(mul)), q.span};
    } catch (const Error& e) {
      resolve_fail(q.name, e);
    }
  }

  const ParseOptions& options_;
  std::map<std::string, FinitePoset> posets_;
  std::map<std::string, SemilatticePtr> semis_;
  std::map<std::string, LatticePtr> lattices_;
};

template <class T>
const T& typed(const Document& doc, std::string_view name, const char* what) {
  const Item* item = doc.find(name);
  if (!item || !std::holds_alternative<T>(*item))
    throw Error(ErrorKind::UnknownElement, "no " + std::string(what) + " named '" +
                                               std::string(name) + "'");
  return std::get<T>(*item);
}

}  // namespace

const std::string& item_name(const Item& item) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, item);
}

const Item* Document::find(std::string_view name) const {
  for (const auto& item : items_)
    if (item_name(item) == name) return &item;
  return nullptr;
}

const FinitePoset& Document::poset(std::string_view name) const {
  return typed<PosetItem>(*this, name, "poset").poset;
}

SemilatticePtr Document::semilattice(std::string_view name) const {
  return make_semilattice(poset(name));
}

LatticePtr Document::lattice(std::string_view name) const { return make_lattice(poset(name)); }

const MapItem& Document::map(std::string_view name) const {
  return typed<MapItem>(*this, name, "map");
}
const RepItem& Document::rep(std::string_view name) const {
  return typed<RepItem>(*this, name, "rep");
}
const FuzzyRepItem& Document::fuzzy_rep(std::string_view name) const {
  return typed<FuzzyRepItem>(*this, name, "fuzzyrep");
}
const QuantaleItem& Document::quantale(std::string_view name) const {
  return typed<QuantaleItem>(*this, name, "quantale");
}

void Document::add(Item item) {
  if (find(item_name(item)))
    throw Error(ErrorKind::DuplicateElement, "duplicate definition '" + item_name(item) + "'");
  items_.push_back(std::move(item));
}

void Document::add_poset(const std::string& name, const FinitePoset& poset) {
  add(PosetItem{name, poset, {}});
}

void Document::add_rep(const std::string& name, const std::string& source,
                       const std::string& target, const CrispRep& rep) {
  add(RepItem{name, source, target, rep, {}});
}

void Document::add_fuzzy_rep(const std::string& name, const std::string& source,
                             const std::string& target, const std::string& lattice,
                             const FuzzyRep& rep) {
  add(FuzzyRepItem{name, source, target, lattice, rep, {}});
}

void Document::add_quantale(const std::string& name, const std::string& lattice,
                            const Quantale& q) {
  add(QuantaleItem{name, lattice, q, {}});
}

void Document::add_map(const std::string& name, const std::string& source,
                       const std::string& target, const SemilatticeMorphism& map) {
  add(MapItem{name, source, target, map, {}});
}

namespace {

bool same_item(const PosetItem& a, const PosetItem& b) { return a.poset == b.poset; }
bool same_item(const MapItem& a, const MapItem& b) {
  return a.source == b.source && a.target == b.target && a.map == b.map;
}
bool same_item(const RepItem& a, const RepItem& b) {
  return a.source == b.source && a.target == b.target && a.rep == b.rep;
}
bool same_item(const FuzzyRepItem& a, const FuzzyRepItem& b) {
  return a.source == b.source && a.target == b.target && a.lattice == b.lattice && a.rep == b.rep;
}
bool same_item(const QuantaleItem& a, const QuantaleItem& b) {
  return a.lattice == b.lattice && a.quantale == b.quantale;
}

}  // namespace

bool Document::operator==(const Document& other) const {
  if (items_.size() != other.items_.size()) return false;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const Item& a = items_[i];
    const Item& b = other.items_[i];
    if (a.index() != b.index() || item_name(a) != item_name(b)) return false;
    const bool same = std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          return same_item(x, std::get<T>(b));
        },
        a);
    if (!same) return false;
  }
  return true;
}

Document parse(std::string_view text, const ParseOptions& options) {
  Parser parser(lex(text));
  const auto raw = parser.file();
  return Resolver(options).run(raw);
}

namespace {

void render_item(std::ostringstream& out, const PosetItem& p) {
  out << "poset " << p.name << " {\n  elements:";
  for (const auto& n : p.poset.names()) out << ' ' << n;
  out << ";\n";
  const auto covers = p.poset.covers();
  if (!covers.empty()) {
    out << "  order: ";
    for (std::size_t i = 0; i < covers.size(); ++i) {
      if (i) out << ", ";
      out << p.poset.name(covers[i].first) << " < " << p.poset.name(covers[i].second);
    }
    out << ";\n";
  }
  out << "}\n";
}

void render_item(std::ostringstream& out, const MapItem& m) {
  out << "map " << m.name << " : " << m.source << " -> " << m.target << " {\n";
  for (Index x = 0; x < m.map.table().size(); ++x)
    out << "  " << m.map.source()->name(x) << " |-> " << m.map.target()->name(m.map(x)) << ";\n";
  out << "}\n";
}

void render_item(std::ostringstream& out, const RepItem& r) {
  const CrispRep& rep = r.rep;
  out << "rep " << r.name << " : " << r.source << " => " << r.target << " {\n";
  for (Index x = 0; x < rep.source()->size(); ++x)
    for (Index y : members(rep.row(x)))
      if (y != rep.target()->zero())
        out << "  " << rep.source()->name(x) << " |> " << rep.target()->name(y) << ";\n";
  out << "}\n";
}

void render_item(std::ostringstream& out, const FuzzyRepItem& f) {
  const FuzzyRep& rep = f.rep;
  out << "fuzzyrep " << f.name << " : " << f.source << " => " << f.target << " over " << f.lattice
      << " {\n";
  for (Index x = 0; x < rep.source()->size(); ++x)
    for (Index y = 0; y < rep.target()->size(); ++y) {
      const Index g = rep.grade(x, y);
      if (y == rep.target()->zero() || g == rep.lattice()->zero()) continue;
      out << "  (" << rep.source()->name(x) << ", " << rep.target()->name(y)
          << ") = " << rep.lattice()->name(g) << ";\n";
    }
  out << "}\n";
}

void render_item(std::ostringstream& out, const QuantaleItem& q) {
  const Quantale& qu = q.quantale;
  out << "quantale " << q.name << " over " << q.lattice << " {\n";
  for (Index a = 0; a < qu.size(); ++a)
    for (Index b = 0; b < qu.size(); ++b)
      if (qu.mul(a, b) != qu.zero())
        out << "  mul(" << qu.name(a) << ", " << qu.name(b) << ") = " << qu.name(qu.mul(a, b))
            << ";\n";
  out << "}\n";
}

}  // namespace

std::string render(const Document& doc) {
  std::ostringstream out;
  bool first = true;
  for (const auto& item : doc.items()) {
    if (!first) out << '\n';
    first = false;
    std::visit([&](const auto& x) { render_item(out, x); }, item);
  }
  return out.str();
}

}  // namespace ambrep::dsl
