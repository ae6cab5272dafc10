#pragma once

#include <stdexcept>
#include <string>

namespace hypadic {

// Violation of a documented precondition: bad argument, malformed input,
// out-of-range request. The CLI maps these to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what_arg)
      : std::invalid_argument(what_arg) {}
};

// Internal consistency failure. Indicates a bug in this library, never bad
// user input. The CLI maps these to exit code 1.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what_arg)
      : std::logic_error(what_arg) {}
};

}  // namespace hypadic
