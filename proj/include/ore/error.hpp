#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ore {

enum class ErrorCode {
  PresentationMismatch,
  InvalidPresentation,
  NonCommuting,
  NotEliminable,
  NotDivisible,
  IntersectionEmpty,
  BoundExceeded,
  NotInvertible,
  Undecided,
  InvalidOreSet,
  RightOreFailure,
  ParseError,
  UndefinedName,
  InvalidArgument,
  Internal,
};

std::string_view errorCodeName(ErrorCode code);

/// Typed failure raised by every engine operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ore
