#include "qinfo/error.hpp"

namespace qinfo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveIndex: return "NonPositiveIndex";
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::UndefinedQExp: return "UndefinedQExp";
    case ErrorCode::DegenerateArgument: return "DegenerateArgument";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::BadFloor: return "BadFloor";
    case ErrorCode::DegenerateWeight: return "DegenerateWeight";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::LimitIndex: return "LimitIndex";
    case ErrorCode::EqualIndices: return "EqualIndices";
    case ErrorCode::BadAlpha: return "BadAlpha";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::ParameterOutOfDomain: return "ParameterOutOfDomain";
    case ErrorCode::EmptyCheckSet: return "EmptyCheckSet";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qinfo
