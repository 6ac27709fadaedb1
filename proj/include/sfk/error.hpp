#pragma once

#include <stdexcept>
#include <string>

namespace sfk {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  Precondition,
  Parse,
  Io,
  Internal,
};

/// Exception type thrown by every module. The C API maps the code onto
/// sfk_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sfk
