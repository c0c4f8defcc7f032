#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cext {

// Stable error codes; the CLI emits the string form in its error objects.
enum class ErrorCode {
  UnknownToken,
  MalformedPower,
  AlphabetMismatch,
  NotCyclicallyReduced,
  TruncationExceeded,
  NotTrivial,
  OutOfBall,
  CapTooSmall,
  NotSlow,
  NotACocycle,
  NotASubgroup,
  DegreeUnsupported,
  InvalidGroup,
  InvalidArgument,
  Overflow,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::MalformedPower: return "MalformedPower";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::NotCyclicallyReduced: return "NotCyclicallyReduced";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::NotTrivial: return "NotTrivial";
    case ErrorCode::OutOfBall: return "OutOfBall";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::NotSlow: return "NotSlow";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace cext
