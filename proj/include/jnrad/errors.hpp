#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jnrad {

enum class ErrorCode {
  DimensionMismatch,
  InvalidArgument,
  NotUnitVector,
  InconsistentDescriptor,
  Unsupported,
  TooLarge,
  ZeroRadius,
  DependentDirection,
  EmptyBasis,
  StaleIndex,
  Schema,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::InconsistentDescriptor: return "InconsistentDescriptor";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroRadius: return "ZeroRadius";
    case ErrorCode::DependentDirection: return "DependentDirection";
    case ErrorCode::EmptyBasis: return "EmptyBasis";
    case ErrorCode::StaleIndex: return "StaleIndex";
    case ErrorCode::Schema: return "Schema";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// ZeroRadius and DependentDirection are properties of the input
  /// mathematics rather than of its encoding.
  bool is_mathematical() const noexcept {
    return code_ == ErrorCode::ZeroRadius || code_ == ErrorCode::DependentDirection;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace jnrad
