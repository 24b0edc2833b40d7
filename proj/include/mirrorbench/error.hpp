#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mirrorbench {

enum class ErrorCode {
  usage,
  io,
  parse,
  degenerate_input,
  fit_failed,
  generation_degenerate,
  undefined_portrait,
  size_limit,
  cancelled,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library exception. Every failure the core raises carries one of the
/// ErrorCode values so the C boundary can translate it to a status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mirrorbench
