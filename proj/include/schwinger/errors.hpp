#pragma once

#include <stdexcept>
#include <string>

namespace schwinger {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested pulse kind has no implementation for this operation.
struct UnsupportedKindError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Base for failures of a numerical procedure on valid input.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Series, quadrature, shooting or root iteration did not reach tolerance.
struct ConvergenceError : NumericalError {
  using NumericalError::NumericalError;
};

// Root finder was handed an interval without a sign change.
struct BracketError : NumericalError {
  using NumericalError::NumericalError;
};

// Intermediate result would leave the double range.
struct OverflowError : NumericalError {
  using NumericalError::NumericalError;
};

} // namespace schwinger
