#pragma once

#include <stdexcept>

namespace klmult {

// Bad user input or violated domain precondition (CLI exit code 2).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A theorem-level consistency check failed, which means either a bug or a
// genuine counterexample to a cross-method identity (CLI exit code 3).
struct crosscheck_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace klmult
