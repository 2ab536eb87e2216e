#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include "ambrep/catalog.hpp"
#include "ambrep/cli.hpp"
#include "ambrep/demos.hpp"
#include "ambrep/dsl.hpp"
#include "ambrep/generate.hpp"
#include "ambrep/laws.hpp"
#include "ambrep/oracle.hpp"

using namespace ambrep;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

Outcome fail(std::string note) { return {false, std::move(note)}; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Index named(const MeetSemilattice& s, const std::string& n) {
  for (Index i = 0; i < s.size(); ++i)
    if (s.name(i) == n) return i;
  throw std::runtime_error("no element " + n);
}

CrispRep trim_zero_row(const CrispRep& r) {
  BoolMatrix t = r.table();
  const Index z = r.source()->zero();
  for (Index y = 0; y < r.target()->size(); ++y) t.set(z, y, y == r.target()->zero());
  return check_rep(std::move(t), r.source(), r.target());
}

FuzzyRep trim_zero_grades(const FuzzyRep& r) {
  std::vector<Index> g = r.grades();
  const std::size_t n2 = r.target()->size();
  const Index z = r.source()->zero();
  for (Index y = 0; y < n2; ++y)
    g[z * n2 + y] = y == r.target()->zero() ? r.lattice()->one() : r.lattice()->zero();
  return check_fuzzy_rep(std::move(g), r.source(), r.target(), r.lattice());
}

Outcome ac1() {
  GeneratorConfig cfg;
  cfg.seed = 42;
  cfg.cases = 200;
  cfg.max_size = 6;
  const auto start = std::chrono::steady_clock::now();
  const laws::LawReport report = laws::run_suite("all", cfg);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t failed = 0, checks = 0;
  for (const auto& l : report.laws) {
    failed += l.failed;
    checks += l.passed + l.failed;
  }
  std::ostringstream note;
  note << report.laws.size() << " laws, " << checks << " checks, " << failed << " failures, "
       << secs << " s";
  if (failed > 0 || secs > 120.0) return fail(note.str());
  return {true, note.str()};
}

Outcome ac2() {
  std::size_t instances = 0;
  const std::vector<catalog::NamedQuantale> quantales = catalog::quantales();
  for (std::uint64_t i = 0; i < 100; ++i) {
    CaseRng rng(2024, i);
    const SemilatticePtr s1 = generate_semilattice(rng, 6);
    const SemilatticePtr s2 = generate_semilattice(rng, 6);
    const SemilatticePtr s3 = generate_semilattice(rng, 6);
    const Quantale& q = quantales[i % quantales.size()].quantale;
    const CrispRep r = generate_crisp_rep(rng, s1, s2, 0.3);
    const FuzzyRep g = generate_fuzzy_rep(rng, s1, s2, q.lattice(), 0.3);
    const FuzzyRep h = generate_fuzzy_rep(rng, s2, s3, q.lattice(), 0.3);
    for (const oracle::OracleReport& rep :
         {oracle::check_way_below(s1->poset()), oracle::check_lawson_dual(s1),
          oracle::check_pseudo_inverse(r), oracle::check_fuzzy_pseudo_inverse(g),
          oracle::check_compose_fuzzy(g, h, q)}) {
      ++instances;
      if (!rep.agree)
        return fail(rep.operation + " " + rep.digest + ": " + rep.witness.value_or(""));
    }
  }
  return {true, std::to_string(instances) + " comparisons"};
}

Outcome ac3() {
  const SemilatticePtr d4 = make_semilattice(catalog::diamond());
  const DualSemilattice dual = lawson_dual(d4);
  std::vector<ElementSet> expected;
  for (const std::vector<std::string>& members :
       std::vector<std::vector<std::string>>{{}, {"1"}, {"a", "1"}, {"b", "1"}}) {
    ElementSet f(d4->size());
    for (const auto& m : members) f.set(named(*d4, m));
    expected.push_back(f);
  }
  std::vector<ElementSet> got;
  for (Index i = 0; i < dual.size(); ++i) got.push_back(dual.filter(i));
  if (!std::is_permutation(got.begin(), got.end(), expected.begin(), expected.end()))
    return fail("D4 dual filters differ");
  if (dual.semilattice()->poset().top()) return fail("D4 dual has a top");

  const SemilatticePtr c2 = make_semilattice(catalog::chain(2));
  const CrispRep p = pseudo_inverse(full_rep(c2, c2));
  if (!(p == identity_rep(p.source()))) return fail("pinv(full C2) is not the identity");

  if (catalog::segments(6)->size() != 28) return fail("|Seg6| != 28");
  const std::size_t tables = oracle::search_separating(c2, c2).size();
  if (tables != 1) return fail(std::to_string(tables) + " separating tables on C2 x C2");
  return {true, "D4 dual, pinv(full C2), |Seg6| = 28, one separating table"};
}

Outcome ac4() {
  const demos::SegmentsReport s = demos::demo_segments(6);
  if (!s.r_prime_arrow) return fail("R' is not an arrow: " + s.r_prime_arrow.detail);
  if (s.r_arrow) return fail("R reported as an arrow");
  if (s.r_arrow.witness.empty()) return fail("no witness for R");
  return {true, "R' arrow, R not (" + s.r_arrow.detail + ")"};
}

Outcome ac5() {
  const demos::GalleryReport g = demos::demo_dual_gallery();
  for (const auto& e : g.entries) {
    const bool chain = e.name.size() == 2 && e.name[0] == 'C';
    if (chain && !e.iso_to_opposite) return fail(e.name + ": dual not opposite");
    if (e.name == "D4" && e.iso_to_opposite) return fail("D4: dual reported opposite");
    if (e.compat_valid || e.witness_x != "1" || e.witness_y != "0′")
      return fail(e.name + ": axiom (1) witness missing");
  }
  if (g.text() != slurp(std::filesystem::path(AMBREP_DEMO_DIR) / "duals.txt"))
    return fail("gallery differs from golden file");
  if (demos::demo_segments(6).text() !=
      slurp(std::filesystem::path(AMBREP_DEMO_DIR) / "segments6.txt"))
    return fail("segments demo differs from golden file");
  return {true, std::to_string(g.entries.size()) + " lattices match golden output"};
}

Outcome ac6() {
  std::size_t crisp = 0, fuzzy = 0, other = 0;
  const std::vector<catalog::NamedQuantale> quantales = catalog::quantales();
  for (std::uint64_t i = 0; crisp < 500; ++i) {
    CaseRng rng(606, i);
    const SemilatticePtr s1 = generate_semilattice(rng, 6);
    const SemilatticePtr s2 = generate_semilattice(rng, 6);
    const CrispRep r = generate_crisp_rep(rng, s1, s2, 0.3, PseudoInvertibility::Required);
    if (!(double_pseudo_inverse(r) == r)) return fail("crisp case " + std::to_string(i));
    ++crisp;
  }
  for (std::uint64_t i = 0; fuzzy < 200; ++i) {
    CaseRng rng(707, i);
    const SemilatticePtr s1 = generate_semilattice(rng, 6);
    const SemilatticePtr s2 = generate_semilattice(rng, 6);
    const LatticePtr l = quantales[i % quantales.size()].quantale.lattice();
    const FuzzyRep g = generate_fuzzy_rep(rng, s1, s2, l, 0.3, PseudoInvertibility::Required);
    if (!(fuzzy_double_pseudo_inverse(g) == g)) return fail("fuzzy case " + std::to_string(i));
    ++fuzzy;
  }
  for (std::uint64_t i = 0; other < 200; ++i) {
    CaseRng rng(808, i);
    const SemilatticePtr s1 = generate_semilattice(rng, 6);
    const SemilatticePtr s2 = generate_semilattice(rng, 6);
    const LatticePtr l = quantales[i % quantales.size()].quantale.lattice();
    const CrispRep r = generate_crisp_rep(rng, s1, s2, 0.3, PseudoInvertibility::Violated);
    const FuzzyRep g = generate_fuzzy_rep(rng, s1, s2, l, 0.3, PseudoInvertibility::Violated);
    if (is_pseudo_invertible(r) || is_pseudo_invertible_fuzzy(g))
      return fail("violating generator produced a pseudo-invertible rep");
    if (!(double_pseudo_inverse(r) == trim_zero_row(r)))
      return fail("trimmed crisp case " + std::to_string(i));
    if (!(fuzzy_double_pseudo_inverse(g) == trim_zero_grades(g)))
      return fail("trimmed fuzzy case " + std::to_string(i));
    ++other;
  }
  return {true, std::to_string(crisp) + " crisp, " + std::to_string(fuzzy) + " fuzzy, " +
                    std::to_string(other) + " non-pseudo-invertible (crisp and fuzzy)"};
}

dsl::Document generated_document(std::uint64_t i) {
  CaseRng rng(909, i);
  const Quantale q = catalog::quantales()[i % catalog::quantales().size()].quantale;
  const SemilatticePtr s1 = generate_semilattice(rng, 6);
  const SemilatticePtr s2 = generate_semilattice(rng, 6);
  dsl::Document doc;
  doc.add_poset("S1", s1->poset());
  doc.add_poset("S2", s2->poset());
  doc.add_poset("L", q.lattice()->poset());
  doc.add_map("f", "S1", "S2", generate_morphism(rng, s1, s2));
  doc.add_rep("R", "S1", "S2", generate_crisp_rep(rng, s1, s2, 0.3));
  doc.add_fuzzy_rep("G", "S1", "S2", "L", generate_fuzzy_rep(rng, s1, s2, q.lattice(), 0.3));
  doc.add_quantale("Mul", "L", q);
  return doc;
}

Outcome ac7() {
  constexpr std::uint64_t kDocs = 120;
  for (std::uint64_t i = 0; i < kDocs; ++i) {
    const dsl::Document doc = generated_document(i);
    const std::string text = dsl::render(doc);
    const dsl::Document back = dsl::parse(text);
    if (!(back == doc) || dsl::render(back) != text)
      return fail("round trip differs on document " + std::to_string(i));
  }
  const std::regex position("line [1-9][0-9]*, column [1-9][0-9]*");
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(AMBREP_CORPUS_DIR)) {
    std::ostringstream out, err;
    const int code = run_cli({"parse", entry.path().string()}, out, err);
    if (code != kExitUsage) return fail(entry.path().filename().string() + " exited " +
                                        std::to_string(code));
    if (!std::regex_search(err.str(), position))
      return fail(entry.path().filename().string() + " has no position");
    ++files;
  }
  if (files < 20) return fail("corpus has only " + std::to_string(files) + " files");
  return {true, std::to_string(kDocs) + " round trips, " + std::to_string(files) +
                    " malformed files rejected with positions"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 law suite", ac1},           {"AC2 oracle agreement", ac2},
      {"AC3 pinned values", ac3},       {"AC4 segments example", ac4},
      {"AC5 dual gallery", ac5},        {"AC6 involution at scale", ac6},
      {"AC7 parser", ac7},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.note << std::endl;
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
