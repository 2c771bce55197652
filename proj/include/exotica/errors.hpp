#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace exotica {

enum class ErrorCode {
  InvalidLetter,
  EnumerationTooLarge,
  Inconclusive,
  GroupMismatch,
  NotNormalized,
  MissingCertificate,
  InfiniteIndex,
  ZeroVector,
  NoComplement,
  EmptyJoin,
  ConfigError,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an enumeration would exceed its cap. The closed-form count is
/// still reported (decimal string, since it may not fit in 64 bits).
class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(std::string count, const std::string& what)
      : Error(ErrorCode::EnumerationTooLarge, what + " (count " + count + ")"),
        count_(std::move(count)) {}

  const std::string& count() const noexcept { return count_; }

 private:
  std::string count_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidLetter: return "InvalidLetter";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::MissingCertificate: return "MissingCertificate";
    case ErrorCode::InfiniteIndex: return "InfiniteIndex";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NoComplement: return "NoComplement";
    case ErrorCode::EmptyJoin: return "EmptyJoin";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace exotica
