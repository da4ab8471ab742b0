#include "quotsing/error.hpp"

namespace quotsing {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Validation: return "validation";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::CapExceeded: return "cap_exceeded";
    case ErrorCode::NotApplicable: return "not_applicable";
    case ErrorCode::HypothesisViolation: return "hypothesis_violation";
    case ErrorCode::UnrealizedCharacter: return "unrealized_character";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::ModulusMismatch: return "modulus_mismatch";
    case ErrorCode::DuplicateCharacter: return "duplicate_character";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Overflow: return "overflow";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

std::string_view to_string(Reason reason) {
  switch (reason) {
    case Reason::NotSmall: return "not_small";
    case Reason::ZeroExponent: return "zero_exponent";
    case Reason::OmegaOrderNotTwo: return "omega_order_not_two";
    case Reason::NotRequested: return "not_requested";
  }
  return "unknown";
}

}  // namespace quotsing
