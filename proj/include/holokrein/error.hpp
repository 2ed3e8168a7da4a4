#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holokrein {

enum class ErrorCode {
  IncompatibleAlgebras,
  UnknownGenerator,
  NotUnimodular,
  ZeroVector,
  SingularTransformation,
  AliasingRisk,
  DomainError,
  NullSubrepresentation,
  NotRegularizable,
  NotHermitian,
  Degenerate,
  ZeroInput,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every domain failure; `code()` is the machine-readable tag
/// surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace holokrein
