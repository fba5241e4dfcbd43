#pragma once

#include <stdexcept>
#include <string>

namespace infgon {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed arguments: duplicate points, degenerate intervals, bad bounds.
struct InvalidInputError : Error {
  using Error::Error;
};

// An endpoint pair that is not a diagonal (equal or neighbouring vertices).
struct NotADiagonalError : Error {
  using Error::Error;
};

// Parameter outside a family's admissible range.
struct OutOfRangeError : Error {
  using Error::Error;
};

// Asking about the factorisation of a morphism that does not exist.
struct NoMorphismError : Error {
  using Error::Error;
};

// An operation was invoked on inputs violating its documented precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// The precover iteration exceeded its cap; the input set most likely
// violates the precovering conditions in a way the upfront check missed.
struct NonTerminationError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace infgon
