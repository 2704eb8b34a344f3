#pragma once

#include <stdexcept>

namespace termrank {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed matrix or degree-pair text.
struct ParseError : Error {
  using Error::Error;
};

// An argument violates an operation's stated domain (bad range, wrong shape).
struct DomainError : Error {
  using Error::Error;
};

// Input exceeds a documented size cap or search/enumeration budget.
struct CapacityError : Error {
  using Error::Error;
};

// Row sums and column sums of a degree pair do not add to the same total.
struct SumMismatchError : Error {
  using Error::Error;
};

// The requested class of matrices is empty.
struct InfeasibleClassError : Error {
  using Error::Error;
};

// Strength is undefined because some column has no 1.
struct UndefinedStrengthError : Error {
  using Error::Error;
};

// A 2x2 interchange was requested on cells that do not form a legal pattern.
struct InvalidMoveError : Error {
  using Error::Error;
};

}  // namespace termrank
