#pragma once

#include <stdexcept>

namespace edgereg {

/// Raised when caller-supplied data violates a documented precondition
/// (malformed JSON, out-of-range vertex, zero or unit ideal where a proper
/// ideal is required, ...). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace edgereg
