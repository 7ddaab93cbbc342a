#pragma once

#include <stdexcept>
#include <string>

namespace cma {

enum class ErrorCode {
  CompositeP,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  CtxMismatch,
  DegreeCapExceeded,
  CharacteristicDividesN,
  NotInvertible,
  NotMonic,
  TooSmall,
  TooLarge,
  ParseError,
  InvariantViolation,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cma
