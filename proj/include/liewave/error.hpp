#pragma once

#include <stdexcept>
#include <string>

namespace liewave {

enum class ErrorCode {
  invalid_argument = 1,
  domain = 2,
  stability = 3,
  config = 4,
  io = 5,
  verification = 6,
};

// All library failures are reported through this type; the C layer maps the
// code onto lw_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace liewave
