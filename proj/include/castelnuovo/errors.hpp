#pragma once

#include <stdexcept>
#include <string>

namespace castelnuovo {

/// Base class for recoverable, user-facing failures (bad input, exhausted budgets).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class NotFullDimensional : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A configured work cap (bounding-box cells, facet subsets) would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownExample : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failures. These indicate a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CrossCheckMismatch : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace castelnuovo
