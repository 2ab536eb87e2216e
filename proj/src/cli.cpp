#include "ambrep/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ambrep/demos.hpp"
#include "ambrep/dsl.hpp"
#include "ambrep/laws.hpp"

namespace ambrep {

namespace {

bool is_invariant(ErrorKind k) {
  switch (k) {
    case ErrorKind::CycleDetected:
    case ErrorKind::NoBottom:
    case ErrorKind::NoMeet:
    case ErrorKind::NoJoin:
    case ErrorKind::NoTop:
    case ErrorKind::NotMorphism:
    case ErrorKind::AxiomViolated:
    case ErrorKind::NotSeparating:
    case ErrorKind::NotIso:
    case ErrorKind::RepViolated:
    case ErrorKind::NotFunctional:
    case ErrorKind::QuantaleViolated:
    case ErrorKind::FuzzyRepViolated:
    case ErrorKind::CutFamilyInvalid:
      return true;
    default:
      return false;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::UnknownElement, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

dsl::Document load(const std::string& path, bool normalize = false) {
  return dsl::parse(read_file(path), {normalize});
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("AMBREP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 42;
}

void check_objects(const dsl::Document& doc, const std::string& only, std::ostream& out) {
  bool seen = false;
  for (const auto& item : doc.items()) {
    const std::string& name = dsl::item_name(item);
    if (!only.empty() && name != only) continue;
    seen = true;
    std::visit(
        [&](const auto& it) {
          using T = std::decay_t<decltype(it)>;
          if constexpr (std::is_same_v<T, dsl::PosetItem>) {
            const FinitePoset& p = it.poset;
            out << "poset " << name << ": " << p.size() << " elements";
            try {
              make_semilattice(p);
              out << ", meet-semilattice with zero";
              make_lattice(p);
              out << ", lattice";
            } catch (const Error& e) {
              out << " (" << e.what() << ")";
            }
            out << "\n";
          } else if constexpr (std::is_same_v<T, dsl::MapItem>) {
            out << "map " << name << ": morphism\n";
          } else if constexpr (std::is_same_v<T, dsl::RepItem>) {
            const Verdict pi = is_pseudo_invertible(it.rep);
            const Verdict arrow = is_sem0_arrow(it.rep);
            out << "rep " << name << ": pseudo-invertible "
                << (pi ? std::string("yes") : "no (" + pi.detail + ")") << ", arrow "
                << (arrow ? std::string("yes") : "no (" + arrow.detail + ")") << "\n";
          } else if constexpr (std::is_same_v<T, dsl::FuzzyRepItem>) {
            const Verdict pi = is_pseudo_invertible_fuzzy(it.rep);
            out << "fuzzyrep " << name << ": pseudo-invertible "
                << (pi ? std::string("yes") : "no (" + pi.detail + ")") << "\n";
          } else {
            out << "quantale " << name << ": "
                << (it.quantale.commutative() ? "commutative" : "noncommutative") << "\n";
          }
        },
        item);
  }
  if (!only.empty() && !seen) throw Error(ErrorKind::UnknownElement, "no object named '" + only + "'");
}

/// Adds a poset unless an equal one of that name is already present.
void add_poset_once(dsl::Document& doc, const std::string& name, const FinitePoset& poset) {
  if (const dsl::Item* item = doc.find(name);
      item && std::holds_alternative<dsl::PosetItem>(*item) &&
      std::get<dsl::PosetItem>(*item).poset == poset)
    return;
  doc.add_poset(name, poset);
}

dsl::Document dual_doc(const dsl::Document& doc, const std::string& name, int iterate) {
  SemilatticePtr s = doc.semilattice(name);
  std::string n = name;
  for (int k = 0; k < iterate; ++k) {
    s = dual_of(s);
    n = dual_name(n);
  }
  dsl::Document result;
  result.add_poset(n, s->poset());
  return result;
}

dsl::Document pinv_doc(const dsl::Document& doc, const std::string& name) {
  dsl::Document result;
  const dsl::Item* item = doc.find(name);
  if (item && std::holds_alternative<dsl::FuzzyRepItem>(*item)) {
    const auto& f = std::get<dsl::FuzzyRepItem>(*item);
    const FuzzyRep inv = fuzzy_pseudo_inverse(f.rep);
    add_poset_once(result, f.lattice, f.rep.lattice()->poset());
    add_poset_once(result, dual_name(f.target), inv.source()->poset());
    add_poset_once(result, dual_name(f.source), inv.target()->poset());
    result.add_fuzzy_rep(dual_name(name), dual_name(f.target), dual_name(f.source), f.lattice, inv);
    return result;
  }
  const auto& r = doc.rep(name);
  const CrispRep inv = pseudo_inverse(r.rep);
  add_poset_once(result, dual_name(r.target), inv.source()->poset());
  add_poset_once(result, dual_name(r.source), inv.target()->poset());
  result.add_rep(dual_name(name), dual_name(r.target), dual_name(r.source), inv);
  return result;
}

dsl::Document compose_doc(const dsl::Document& doc, const std::string& first,
                          const std::string& second, const std::string& quantale) {
  dsl::Document result;
  const std::string name = first + "_" + second;
  const dsl::Item* a = doc.find(first);
  if (a && std::holds_alternative<dsl::FuzzyRepItem>(*a)) {
    const auto& r = std::get<dsl::FuzzyRepItem>(*a);
    const auto& q = doc.fuzzy_rep(second);
    Quantale qt = quantale.empty() ? meet_quantale(r.rep.lattice()) : doc.quantale(quantale).quantale;
    const FuzzyRep c = compose_fuzzy(r.rep, q.rep, qt);
    add_poset_once(result, r.lattice, r.rep.lattice()->poset());
    add_poset_once(result, r.source, c.source()->poset());
    add_poset_once(result, q.target, c.target()->poset());
    if (!quantale.empty()) result.add_quantale(quantale, r.lattice, qt);
    result.add_fuzzy_rep(name, r.source, q.target, r.lattice, c);
    return result;
  }
  if (!quantale.empty())
    throw Error(ErrorKind::UnknownElement, "--quantale applies to fuzzy representations only");
  const auto& r = doc.rep(first);
  const auto& q = doc.rep(second);
  const CrispRep c = compose(r.rep, q.rep);
  add_poset_once(result, r.source, c.source()->poset());
  add_poset_once(result, q.target, c.target()->poset());
  result.add_rep(name, r.source, q.target, c);
  return result;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) parts.push_back(part);
  return parts;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ambiguous representations: duals, pseudo-inverses, law checks"};
  app.require_subcommand(1);

  std::string file, object, rep, reps, quantale, suite = "all", demo_name;
  bool normalize = false, json = false;
  int iterate = 1;
  GeneratorConfig cfg;
  cfg.seed = default_seed();
  std::optional<std::size_t> only_case;
  std::size_t grid = 6;

  auto* parse_cmd = app.add_subcommand("parse", "Parse a file and print it in canonical form");
  parse_cmd->add_option("file", file)->required();
  parse_cmd->add_flag("--normalize", normalize, "Complete invalid representations");

  auto* check_cmd = app.add_subcommand("check", "Validate and classify the objects of a file");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("--object", object);

  auto* dual_cmd = app.add_subcommand("dual", "Print the Lawson dual of a semilattice");
  dual_cmd->add_option("file", file)->required();
  dual_cmd->add_option("--object", object)->required();
  dual_cmd->add_option("--iterate", iterate)->check(CLI::NonNegativeNumber);

  auto* pinv_cmd = app.add_subcommand("pinv", "Print the pseudo-inverse of a representation");
  pinv_cmd->add_option("file", file)->required();
  pinv_cmd->add_option("--rep", rep)->required();

  auto* compose_cmd = app.add_subcommand("compose", "Compose two representations");
  compose_cmd->add_option("file", file)->required();
  compose_cmd->add_option("--reps", reps)->required();
  compose_cmd->add_option("--quantale", quantale);

  auto* laws_cmd = app.add_subcommand("laws", "Run a law suite on generated instances");
  laws_cmd->add_option("--suite", suite)->check(CLI::IsMember(laws::suite_names()));
  laws_cmd->add_option("--seed", cfg.seed);
  laws_cmd->add_option("--cases", cfg.cases);
  laws_cmd->add_option("--max-size", cfg.max_size)->check(CLI::Range(2, 12));
  laws_cmd->add_option("--quantale", cfg.quantale);
  laws_cmd->add_option("--density", cfg.density)->check(CLI::Range(0.0, 1.0));
  laws_cmd->add_option("--case", only_case, "Replay a single case");
  laws_cmd->add_flag("--json", json);

  auto* demo_cmd = app.add_subcommand("demo", "Print a worked example");
  demo_cmd->add_option("name", demo_name)->required()->check(CLI::IsMember({"segments", "duals"}));
  demo_cmd->add_option("--n", grid, "Grid size for the segments demo");

  std::vector<std::string> argv_storage{"ambrep"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*parse_cmd) {
      out << dsl::render(load(file, normalize));
    } else if (*check_cmd) {
      check_objects(load(file), object, out);
    } else if (*dual_cmd) {
      out << dsl::render(dual_doc(load(file), object, iterate));
    } else if (*pinv_cmd) {
      out << dsl::render(pinv_doc(load(file), rep));
    } else if (*compose_cmd) {
      const auto names = split_commas(reps);
      if (names.size() != 2) {
        err << "--reps expects two names separated by a comma\n";
        return kExitUsage;
      }
      out << dsl::render(compose_doc(load(file), names[0], names[1], quantale));
    } else if (*laws_cmd) {
      const laws::LawReport report = laws::run_suite(suite, cfg, only_case);
      if (json)
        out << laws::to_json(report).dump(2) << "\n";
      else
        out << laws::to_text(report);
      return report.all_passed() ? kExitOk : kExitLawFailure;
    } else if (*demo_cmd) {
      if (demo_name == "segments") {
        const auto report = demos::demo_segments(grid);
        out << report.text();
      } else {
        out << demos::demo_dual_gallery().text();
      }
    }
  } catch (const SourceError& e) {
    err << file << ": " << e.what();
    err << "\n";
    if (e.kind() == ErrorKind::ResolveError && e.cause() && is_invariant(*e.cause()))
      return kExitLawFailure;
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_invariant(e.kind()) ? kExitLawFailure : kExitUsage;
  }
  return kExitOk;
}

}  // namespace ambrep
