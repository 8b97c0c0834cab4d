#pragma once

#include <stdexcept>
#include <string>

namespace vcolor {

// Numeric values double as CLI exit codes for the first three.
enum class ErrorCode : int {
  input = 1,
  non_convergence = 2,
  contract_violation = 3,
  invalid_argument = 4,
  size_limit = 5,
  numerical = 6,
};

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

}  // namespace vcolor
