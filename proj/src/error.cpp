#include "swdon/error.hpp"

namespace swdon {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoCharacteristicVector: return "NoCharacteristicVector";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::OddExponent: return "OddExponent";
    case ErrorCode::NonIntegralC: return "NonIntegralC";
    case ErrorCode::LambdaNotOrthogonal: return "LambdaNotOrthogonal";
    case ErrorCode::ConjectureNotAssumed: return "ConjectureNotAssumed";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::InadmissibleParity: return "InadmissibleParity";
    case ErrorCode::AbundanceUndetermined: return "AbundanceUndetermined";
    case ErrorCode::NotCharacteristic: return "NotCharacteristic";
    case ErrorCode::NonSimpleType: return "NonSimpleType";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace swdon
