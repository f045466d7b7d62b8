#pragma once

#include <stdexcept>

namespace zsum {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's documented domain.
struct BadArgs : Error {
  using Error::Error;
};

// Input too large for an exhaustive routine (or a sum range that does not
// fit the 64-bit target type).
struct SizeLimit : Error {
  using Error::Error;
};

// Substitution constant rejected: an image element would become rational,
// or two image elements would coincide.
struct BadLambda : Error {
  using Error::Error;
};

// Search window violates its own invariants.
struct InfeasibleSpace : Error {
  using Error::Error;
};

}  // namespace zsum
