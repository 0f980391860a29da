#pragma once

#include <stdexcept>
#include <string>

namespace chargent {

// Invalid charge model, unknown catalog name, malformed model config.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation
// (charge density on the boundary, SU(2) extremal point, degenerate f, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested total charge is not realizable for the given number of bodies.
class EmptySectorError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Monte Carlo block exceeds the configured memory budget.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chargent
