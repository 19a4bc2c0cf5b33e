#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qinfo {

enum class ErrorCode {
  NonPositiveIndex,
  NonPositiveArgument,
  UndefinedQExp,
  DegenerateArgument,
  DomainError,
  LengthMismatch,
  NonPositiveWeight,
  NotNormalized,
  TooShort,
  BadFloor,
  DegenerateWeight,
  BadParameter,
  LimitIndex,
  EqualIndices,
  BadAlpha,
  UnknownCheck,
  ParameterOutOfDomain,
  EmptyCheckSet,
  BadConfig,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace qinfo
