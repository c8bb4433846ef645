#pragma once

#include <stdexcept>
#include <string>

namespace hcrep {

// A precondition of a mathematical operation was violated (dimension
// mismatch, foreign lattice element, lattice axiom failure, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A document could not be read or does not have the expected shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hcrep
