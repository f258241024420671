#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swdon {

enum class ErrorCode {
  DimensionMismatch,
  NoCharacteristicVector,
  ParityError,
  OddExponent,
  NonIntegralC,
  LambdaNotOrthogonal,
  ConjectureNotAssumed,
  HypothesisViolation,
  InadmissibleParity,
  AbundanceUndetermined,
  NotCharacteristic,
  NonSimpleType,
  ParseError,
  ValidationError,
  UnknownCatalogEntry,
  Usage,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. The message names the violated
/// precondition so that the CLI can surface it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace swdon
