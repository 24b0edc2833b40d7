#include "mirrorbench/error.hpp"

namespace mirrorbench {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::usage: return "usage";
    case ErrorCode::io: return "io";
    case ErrorCode::parse: return "parse";
    case ErrorCode::degenerate_input: return "degenerate_input";
    case ErrorCode::fit_failed: return "fit_failed";
    case ErrorCode::generation_degenerate: return "generation_degenerate";
    case ErrorCode::undefined_portrait: return "undefined_portrait";
    case ErrorCode::size_limit: return "size_limit";
    case ErrorCode::cancelled: return "cancelled";
  }
  return "unknown";
}

}  // namespace mirrorbench
