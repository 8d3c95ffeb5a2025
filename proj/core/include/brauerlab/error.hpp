#pragma once

#include <stdexcept>
#include <string>

namespace brauerlab {

// Raised when an input is well-formed but outside the domain of an
// operation (disconnected configuration, gcd > 1 where a semigroup is
// required, exhausted shift schedule, ...). The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configuration with truncated (or absent) vertices was handed to an
// operation that requires a reduced one.
class NonReducedError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace brauerlab
