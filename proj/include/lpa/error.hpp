#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace lpa {

enum class ErrorCode {
  DanglingEndpoint,
  DuplicateId,
  EmptyVertexSet,
  UnknownVertex,
  InvalidPath,
  GraphTooLarge,
  InvalidSubset,
  NotABreakingVertex,
  InvalidAdmissiblePair,
  InvalidElement,
  FieldMismatch,
  ZeroElement,
  BoundExceeded,
  ExitlessCycleObstruction,
  AllGeneratorsZero,
  NotExitlessCycleBase,
  NotInCorner,
  VerificationFailed,
  SyntaxError,
  UnknownIdentifier,
  GhostOnGroup,
  ZeroDenominator,
  NonPrimeModulus,
  UsageError,
  IoError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. `detail` carries structured context
/// (offending identifiers, source positions, obstruction cycles) for the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, nlohmann::json detail = nullptr)
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const nlohmann::json& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  nlohmann::json detail_;
};

}  // namespace lpa
