#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ambrep/generate.hpp"

namespace ambrep::laws {

/// A failing instance: the objects involved, rendered in the text format so
/// they can be fed back to the command line, plus what went wrong.
struct Witness {
  std::size_t case_index = 0;
  std::string instance;
  std::string detail;
};

struct LawResult {
  std::string id;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<Witness> witnesses;
};

struct LawReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<LawResult> laws;

  bool all_passed() const;
};

/// Deliberate defects for testing the harness itself.
struct Mutation {
  /// Replace the crisp pseudo-inverse by the full relation.
  bool corrupt_pinv = false;
};

/// "order", "dual", "compat", "crisp", "fuzzy", "all".
const std::vector<std::string>& suite_names();
/// Law ids checked by a suite, in report order. Throws UnknownElement.
std::vector<std::string> law_ids(const std::string& suite);

/// Runs every case of the suite (or only `only_case`), cases in parallel.
/// The report depends only on (suite, config, only_case, mutation).
LawReport run_suite(const std::string& suite, const GeneratorConfig& config,
                    std::optional<std::size_t> only_case = std::nullopt,
                    const Mutation& mutation = {});

/// At most this many witnesses are kept per law.
inline constexpr std::size_t kMaxWitnesses = 3;

nlohmann::ordered_json to_json(const LawReport& report);
/// One line per law plus the witnesses of failing laws.
std::string to_text(const LawReport& report);

}  // namespace ambrep::laws
