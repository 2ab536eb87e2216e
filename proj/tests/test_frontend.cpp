#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

#include "ambrep/cli.hpp"
#include "ambrep/demos.hpp"
#include "ambrep/dsl.hpp"
#include "ambrep/generate.hpp"
#include "ambrep/laws.hpp"

using namespace testing;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("ambrep_test_" + name);
  std::ofstream(p) << text;
  return p;
}

const char* kChains = R"(
poset C2 { elements: 0 1; order: 0 < 1; }
poset C3 { elements: 0 m 1; order: 0 < m, m < 1; }
map f : C2 -> C3 { 1 |-> m; }
rep R : C2 => C3 { 1 |> m; }
rep Q : C3 => C2 { m |> 1; 1 |> 1; }
fuzzyrep G : C2 => C3 over C3 { (1, m) = 1; (1, 1) = m; }
quantale Meet over C3 { mul(m, m) = m; mul(m, 1) = m; mul(1, m) = m; mul(1, 1) = 1; }
)";

}  // namespace

TEST_CASE("parsing") {
  const dsl::Document doc = dsl::parse("poset C2 { elements: z o; order: z < o; }");
  const FinitePoset& p = doc.poset("C2");
  CHECK(find_isomorphism(p, catalog::chain(2)));
  CHECK(p.leq(ix(p, "z"), ix(p, "o")));

  const dsl::Document chains = dsl::parse(kChains);
  CHECK(chains.rep("R").rep == rep(c2(), c3(), {{"0", "0"}, {"1", "0"}, {"1", "m"}}));
  CHECK(chains.map("f").map(1) == ix(c3(), "m"));
  CHECK(chains.fuzzy_rep("G").rep.grade(1, 2) == ix(c3(), "m"));
  CHECK(chains.quantale("Meet").quantale == meet_quantale(make_lattice(catalog::chain(3))));
}

TEST_CASE("strict and normalizing resolution") {
  const std::string text = "poset C3 { elements: 0 m 1; order: 0 < m, m < 1; }\n"
                           "rep R : C3 => C3 { 1 |> 1; }\n";
  try {
    dsl::parse(text);
    FAIL("accepted");
  } catch (const SourceError& e) {
    CHECK(e.kind() == ErrorKind::ResolveError);
    CHECK(e.cause() == ErrorKind::RepViolated);
    CHECK(e.position().line == 2);
  }
  const dsl::Document doc = dsl::parse(text, {true});
  const SemilatticePtr c = c3();
  CHECK(doc.rep("R").rep ==
        rep(c, c, {{"0", "0"}, {"m", "0"}, {"1", "0"}, {"1", "m"}, {"1", "1"}}));

  const std::string zero_col = "poset C2 { elements: 0 1; order: 0 < 1; }\n"
                               "poset C3 { elements: 0 m 1; order: 0 < m, m < 1; }\n"
                               "fuzzyrep G : C2 => C2 over C3 { (1, 0) = m; }\n";
  CHECK_THROWS_AS(dsl::parse(zero_col), SourceError);
}

TEST_CASE("syntax errors carry positions") {
  try {
    dsl::parse("poset C2 {\n  elements: 0 1\n}");
    FAIL("accepted");
  } catch (const SourceError& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(e.position().line == 3);
    CHECK(e.position().column == 1);
    CHECK(e.expected() == "';'");
  }
}

TEST_CASE("render round trips") {
  std::vector<std::string> texts = {kChains};

  dsl::Document gallery;
  for (const auto& [name, l] : catalog::gallery()) gallery.add_poset(name, l->poset());
  gallery.add_poset("V3", catalog::vee());
  texts.push_back(dsl::render(gallery));

  dsl::Document quantales;
  for (const auto& [name, q] : catalog::quantales()) {
    quantales.add_poset("L_" + name, q.lattice()->poset());
    quantales.add_quantale(name, "L_" + name, q);
  }
  texts.push_back(dsl::render(quantales));

  for (const auto& t : texts) {
    const dsl::Document doc = dsl::parse(t);
    const std::string once = dsl::render(doc);
    CHECK(dsl::parse(once) == doc);
    CHECK(dsl::render(dsl::parse(once)) == once);
  }
}

TEST_CASE("generators are deterministic and valid") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    CaseRng a(1, i), b(1, i);
    const SemilatticePtr s = generate_semilattice(a, 6), t = generate_semilattice(b, 6);
    CHECK(*s == *t);
    const CrispRep r = generate_crisp_rep(a, s, s, 0.3, PseudoInvertibility::Required);
    CHECK(r == generate_crisp_rep(b, t, t, 0.3, PseudoInvertibility::Required));
    CHECK(is_pseudo_invertible(r));
    CHECK_NOTHROW(check_rep(r.table(), r.source(), r.target()));
    const FuzzyRep g =
        generate_fuzzy_rep(a, s, s, catalog::rel2().lattice(), 0.3, PseudoInvertibility::Required);
    CHECK(is_pseudo_invertible_fuzzy(g));
    CHECK_NOTHROW(check_fuzzy_rep(g.grades(), g.source(), g.target(), g.lattice()));
  }
  CaseRng x(1, 0), y(1, 1);
  CHECK(x.next() != y.next());
}

TEST_CASE("law suites") {
  GeneratorConfig cfg;
  cfg.seed = 7;
  cfg.cases = 200;
  cfg.max_size = 6;
  const laws::LawReport crisp = laws::run_suite("crisp", cfg);
  CHECK(crisp.all_passed());
  CHECK(crisp.laws.size() == laws::law_ids("crisp").size());

  cfg.cases = 40;
  const laws::LawReport one = laws::run_suite("all", cfg);
  const laws::LawReport two = laws::run_suite("all", cfg);
  CHECK(laws::to_json(one).dump() == laws::to_json(two).dump());
  CHECK(laws::to_text(one) == laws::to_text(two));

  // A suite on its own sees the same instances as inside "all".
  const laws::LawReport fuzzy = laws::run_suite("fuzzy", cfg);
  for (const auto& l : fuzzy.laws)
    for (const auto& m : one.laws)
      if (m.id == l.id) CHECK(m.passed == l.passed);

  CHECK_THROWS_AS(laws::run_suite("nope", cfg), Error);
}

TEST_CASE("corrupted pseudo-inverse is caught") {
  GeneratorConfig cfg;
  cfg.cases = 30;
  const laws::LawReport report = laws::run_suite("crisp", cfg, std::nullopt, {true});
  CHECK_FALSE(report.all_passed());
  const auto it = std::find_if(report.laws.begin(), report.laws.end(),
                               [](const laws::LawResult& l) { return l.id == "LAW-INV"; });
  REQUIRE(it != report.laws.end());
  CHECK(it->failed > 0);
  REQUIRE_FALSE(it->witnesses.empty());
  const laws::Witness& w = it->witnesses.front();
  // The instance is replayable text and the case fails again on its own.
  const dsl::Document doc = dsl::parse(w.instance);
  CHECK_NOTHROW(doc.rep("R"));
  const laws::LawReport again = laws::run_suite("crisp", cfg, w.case_index, {true});
  for (const auto& l : again.laws)
    if (l.id == "LAW-INV") CHECK(l.failed == 1);
}

TEST_CASE("command line") {
  const auto file = temp_file("chains.amb", kChains);
  Run r = cli({"parse", file.string()});
  CHECK(r.code == kExitOk);
  CHECK(dsl::parse(r.out) == dsl::parse(kChains));

  r = cli({"pinv", file.string(), "--rep", "R"});
  REQUIRE(r.code == kExitOk);
  const auto once = temp_file("pinv1.amb", r.out);
  r = cli({"pinv", once.string(), "--rep", "^R"});
  REQUIRE(r.code == kExitOk);
  CHECK(dsl::parse(r.out).rep("R").rep == dsl::parse(kChains).rep("R").rep);

  r = cli({"compose", file.string(), "--reps", "R,Q"});
  CHECK(r.code == kExitOk);
  CHECK(dsl::parse(r.out).rep("R_Q").rep == rep(c2(), c2(), {{"0", "0"}, {"1", "0"}, {"1", "1"}}));

  r = cli({"dual", file.string(), "--object", "C3", "--iterate", "2"});
  CHECK(r.code == kExitOk);
  CHECK(dsl::parse(r.out).poset("C3") == c3()->poset());

  CHECK(cli({"check", file.string(), "--object", "R"}).code == kExitOk);
  CHECK(cli({"check", file.string(), "--object", "missing"}).code == kExitUsage);

  const auto bad = temp_file("bad.amb", "poset C2 { elements: 0 1; order: 0 < 1; }\n"
                                        "rep R : C2 => C2 { 0 |> 1; }\n");
  r = cli({"check", bad.string()});
  CHECK(r.code == kExitLawFailure);
  CHECK(r.err.find("line 2") != std::string::npos);

  const auto broken = temp_file("broken.amb", "poset C2 { elements 0 1; }");
  r = cli({"parse", broken.string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("line 1, column 21") != std::string::npos);

  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"laws", "--suite", "bogus"}).code == kExitUsage);
  r = cli({"laws", "--suite", "dual", "--cases", "5", "--json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"suite\": \"dual\"") != std::string::npos);
}

TEST_CASE("demos match their golden files") {
  const std::filesystem::path dir = AMBREP_DEMO_DIR;
  CHECK(demos::demo_segments(6).text() == slurp(dir / "segments6.txt"));
  CHECK(demos::demo_dual_gallery().text() == slurp(dir / "duals.txt"));
  CHECK(cli({"demo", "segments"}).out == slurp(dir / "segments6.txt"));
  CHECK(cli({"demo", "segments", "--n", "7"}).code == kExitUsage);
}
