#pragma once

#include <stdexcept>
#include <string>

namespace fpchaos {

enum class ErrorCode {
  invalid_argument = 1,
  size_limit = 2,
  domain = 3,
  grid_mismatch = 4,
  not_mirror_symmetric = 5,
  parse = 6,
  io = 7,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace fpchaos
