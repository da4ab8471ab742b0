#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quotsing {

enum class ErrorCode {
  Validation,
  Syntax,
  CapExceeded,
  NotApplicable,
  HypothesisViolation,
  UnrealizedCharacter,
  DimensionMismatch,
  ModulusMismatch,
  DuplicateCharacter,
  Precondition,
  Overflow,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Machine-readable reason attached to every field whose precondition failed.
enum class Reason {
  NotSmall,           // G contains a pseudo-reflection
  ZeroExponent,       // some a_ij = 0, outside Weston's hypotheses
  OmegaOrderNotTwo,   // [omega] does not have order exactly 2
  NotRequested,       // field skipped by the caller (e.g. catalog rows)
};

std::string_view to_string(Reason reason);

}  // namespace quotsing
