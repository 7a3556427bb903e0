#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdp {

// Stable machine-readable error codes; these are also the codes emitted in
// the CLI's structured error JSON.
enum class ErrorCode {
  MixedTreatmentPresence,
  InsufficientSideData,
  ScenarioMismatch,
  NonBinaryValue,
  SingularDesign,
  DegenerateRunning,
  WeakDenominator,
  WeakFirstStage,
  DomainError,
  NoVariance,
  IncoherentPlan,
  Infeasible,
  IncoherentInputs,
  InvalidDgp,
  MissingColumn,
  ParseError,
  InvalidArgument,
  IoError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace rdp
