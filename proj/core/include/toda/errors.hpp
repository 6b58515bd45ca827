#pragma once

#include <stdexcept>

namespace toda {

// A well-formed request for something the engine deliberately does not
// support (for example, the factorized method on a branching family).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace toda
