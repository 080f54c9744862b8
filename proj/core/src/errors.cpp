#include "fredholm/errors.hpp"

namespace fredholm {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BasisMismatch:
      return "BasisMismatch";
    case ErrorCode::ResolutionMismatch:
      return "ResolutionMismatch";
    case ErrorCode::UnboundedSymbol:
      return "UnboundedSymbol";
    case ErrorCode::TargetUnreachable:
      return "TargetUnreachable";
    case ErrorCode::NoSplitFound:
      return "NoSplitFound";
    case ErrorCode::KappaOutOfRange:
      return "KappaOutOfRange";
    case ErrorCode::ResidualCheckFailed:
      return "ResidualCheckFailed";
    case ErrorCode::DegenerateBasis:
      return "DegenerateBasis";
    case ErrorCode::AmbiguousSingularity:
      return "AmbiguousSingularity";
    case ErrorCode::CertificationFailed:
      return "CertificationFailed";
    case ErrorCode::EquivalenceViolated:
      return "EquivalenceViolated";
    case ErrorCode::RNotInvertible:
      return "RNotInvertible";
    case ErrorCode::NegativeS:
      return "NegativeS";
    case ErrorCode::BootstrapViolated:
      return "BootstrapViolated";
    case ErrorCode::InsufficientSupport:
      return "InsufficientSupport";
    case ErrorCode::ParseError:
      return "ParseError";
    case ErrorCode::ValidationError:
      return "ValidationError";
  }
  return "UnknownError";
}

}  // namespace fredholm
