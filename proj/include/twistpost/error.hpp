#pragma once

#include <stdexcept>
#include <string>

namespace twistpost {

enum class ErrorCode {
  InvalidTable,
  DimensionMismatch,
  NotAssociative,
  NoIdentity,
  NoInverse,
  UnsupportedOrder,
  BoundExceeded,
  NotATwistedPostGroup,
  AxiomViolation,  // truss, RBS, brace, ring, YBE or Lie data fails its axioms
  PreconditionFailed,
  InternalInconsistency,
  CocycleNotSurjective,
  CocycleNotNormalized,
  NotInner,
  SearchSpaceExceeded,
  BudgetExceeded,
  VerificationMismatch,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code);

/// The single exception type thrown by the library. `code()` distinguishes
/// the failure; `what()` carries a human-readable message including any
/// witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twistpost
