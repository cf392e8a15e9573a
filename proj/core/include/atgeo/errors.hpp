#pragma once

#include <stdexcept>
#include <string>

namespace atgeo {

// Argument outside the domain of a scalar or pointwise function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A named precondition of a construction or certification step failed.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two coefficients cannot be combined cellwise into a single twist term.
class IncompatibleSpecs : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace atgeo
