#pragma once

#include <stdexcept>
#include <string>

namespace esm {

// Bad input: malformed expressions, out-of-range parameters, violated
// preconditions. The CLI maps this to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed to hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw InputError(msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw InternalError(msg); }

}  // namespace esm
