#include "ambrep/error.hpp"

namespace ambrep {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::EmptyCarrier: return "EmptyCarrier";
    case ErrorKind::NoBottom: return "NoBottom";
    case ErrorKind::NoMeet: return "NoMeet";
    case ErrorKind::NoJoin: return "NoJoin";
    case ErrorKind::NoTop: return "NoTop";
    case ErrorKind::NotMorphism: return "NotMorphism";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AxiomViolated: return "AxiomViolated";
    case ErrorKind::NotSeparating: return "NotSeparating";
    case ErrorKind::NotIso: return "NotIso";
    case ErrorKind::RepViolated: return "RepViolated";
    case ErrorKind::NotFunctional: return "NotFunctional";
    case ErrorKind::MiddleMismatch: return "MiddleMismatch";
    case ErrorKind::QuantaleViolated: return "QuantaleViolated";
    case ErrorKind::QuantaleLatticeMismatch: return "QuantaleLatticeMismatch";
    case ErrorKind::FuzzyRepViolated: return "FuzzyRepViolated";
    case ErrorKind::CutFamilyInvalid: return "CutFamilyInvalid";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::BadGrid: return "BadGrid";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ResolveError: return "ResolveError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string clause,
             std::vector<Index> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      clause_(std::move(clause)),
      witness_(std::move(witness)) {}

SourceError::SourceError(ErrorKind kind, SourcePos pos, const std::string& message,
                         std::string expected, std::optional<ErrorKind> cause)
    : Error(kind, "line " + std::to_string(pos.line) + ", column " +
                      std::to_string(pos.column) + ": " + message),
      pos_(pos),
      expected_(std::move(expected)),
      cause_(cause) {}

}  // namespace ambrep
