#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bidouble {

enum class ErrorCode {
  ConstraintViolation,
  OutOfRange,
  Overflow,
  NotComparable,
  InvalidMember,
  NotCatanese,
  MultTooSmall,
  NegativeNodes,
  BoundTooLarge,
  InvalidArgument,
  IoError,
  SchemaMismatch,
};

std::string_view error_name(ErrorCode code) noexcept;

// Every domain failure carries a code plus the full list of reasons, so a
// caller can report all violated constraints at once.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::vector<std::string> details);
  Error(ErrorCode code, std::string detail);

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

}  // namespace bidouble
