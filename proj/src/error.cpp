#include "fpchaos/error.hpp"

namespace fpchaos {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
    case ErrorCode::size_limit: return "SIZE_LIMIT";
    case ErrorCode::domain: return "DOMAIN";
    case ErrorCode::grid_mismatch: return "GRID_MISMATCH";
    case ErrorCode::not_mirror_symmetric: return "NOT_MIRROR_SYMMETRIC";
    case ErrorCode::parse: return "PARSE";
    case ErrorCode::io: return "IO";
  }
  return "UNKNOWN";
}

}  // namespace fpchaos
