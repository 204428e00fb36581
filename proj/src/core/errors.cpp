#include "bidouble/errors.hpp"

#include <utility>

namespace bidouble {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::InvalidMember: return "InvalidMember";
    case ErrorCode::NotCatanese: return "NotCatanese";
    case ErrorCode::MultTooSmall: return "MultTooSmall";
    case ErrorCode::NegativeNodes: return "NegativeNodes";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
  }
  return "Unknown";
}

namespace {

std::string summarize(ErrorCode code, const std::vector<std::string>& details) {
  std::string out{error_name(code)};
  for (std::size_t i = 0; i < details.size(); ++i) {
    out += i == 0 ? ": " : "; ";
    out += details[i];
  }
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::vector<std::string> details)
    : std::runtime_error(summarize(code, details)), code_(code), details_(std::move(details)) {}

Error::Error(ErrorCode code, std::string detail)
    : Error(code, std::vector<std::string>{std::move(detail)}) {}

}  // namespace bidouble
