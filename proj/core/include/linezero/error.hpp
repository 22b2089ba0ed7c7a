#pragma once

#include <stdexcept>
#include <string>

namespace linezero {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: out-of-domain argument, invalid parameter ordering, malformed text.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An iteration or quadrature did not reach its tolerance within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Two independent constructions of the same object disagreed.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace linezero
