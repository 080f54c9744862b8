#ifndef FREDHOLM_ERRORS_HPP
#define FREDHOLM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fredholm {

// Every failure mode of the library carries one of these codes so callers
// (and the CLI report) can react to the condition, not the message text.
enum class ErrorCode {
  BasisMismatch,
  ResolutionMismatch,
  UnboundedSymbol,
  TargetUnreachable,
  NoSplitFound,
  KappaOutOfRange,
  ResidualCheckFailed,
  DegenerateBasis,
  AmbiguousSingularity,
  CertificationFailed,
  EquivalenceViolated,
  RNotInvertible,
  NegativeS,
  BootstrapViolated,
  InsufficientSupport,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorCode code) noexcept;

class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw SolverError(code, message);
}

}  // namespace fredholm

#endif  // FREDHOLM_ERRORS_HPP
