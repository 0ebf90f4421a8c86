#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace isocut {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A result or a derived size does not fit the integer types in use.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// The request is well-formed but has no resolved answer (e.g. k-super
/// connectivity for k not a multiple of L-1).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// An enumeration would exceed (or did exceed) its configured budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A minimum scan over a range larger than its cap was requested.
class ScanBudgetExceeded : public BudgetExceeded {
public:
  using BudgetExceeded::BudgetExceeded;
};

/// No vertex set satisfies the requested constraints.
class InfeasibleResult : public Error {
public:
  using Error::Error;
};

} // namespace isocut
