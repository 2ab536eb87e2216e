#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ambrep {

using Index = std::size_t;

enum class ErrorKind {
  CycleDetected,
  UnknownElement,
  DuplicateElement,
  EmptyCarrier,
  NoBottom,
  NoMeet,
  NoJoin,
  NoTop,
  NotMorphism,
  DimensionMismatch,
  AxiomViolated,
  NotSeparating,
  NotIso,
  RepViolated,
  NotFunctional,
  MiddleMismatch,
  QuantaleViolated,
  QuantaleLatticeMismatch,
  FuzzyRepViolated,
  CutFamilyInvalid,
  SizeCap,
  BadGrid,
  ParseError,
  ResolveError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `clause` names the violated axiom or
/// definition clause (e.g. "(1)", "row-lower"); `witness` holds the element
/// indices that exhibit the violation, in the order the clause mentions them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string clause = {},
        std::vector<Index> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& clause() const noexcept { return clause_; }
  const std::vector<Index>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string clause_;
  std::vector<Index> witness_;
};

/// Source position attached to DSL failures. Lines and columns are 1-based.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// A DSL failure: either a syntax error (kind ParseError) or a resolution
/// error (kind ResolveError). For resolution errors caused by an invariant
/// violation, `cause` carries the underlying kind (e.g. RepViolated).
class SourceError : public Error {
 public:
  SourceError(ErrorKind kind, SourcePos pos, const std::string& message,
              std::string expected = {},
              std::optional<ErrorKind> cause = std::nullopt);

  SourcePos position() const noexcept { return pos_; }
  const std::string& expected() const noexcept { return expected_; }
  std::optional<ErrorKind> cause() const noexcept { return cause_; }

 private:
  SourcePos pos_;
  std::string expected_;
  std::optional<ErrorKind> cause_;
};

/// Outcome of a predicate that reports a witness when it does not hold.
struct Verdict {
  bool holds = true;
  std::vector<Index> witness;
  std::string detail;

  explicit operator bool() const noexcept { return holds; }

  static Verdict yes() { return {}; }
  static Verdict no(std::vector<Index> witness, std::string detail) {
    return {false, std::move(witness), std::move(detail)};
  }
};

}  // namespace ambrep
