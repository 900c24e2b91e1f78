#pragma once

#include <stdexcept>
#include <string>

namespace hankel {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (index out of range, p > 1/2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested derivative/kernel order exceeds the supported bound.
class OrderTooLargeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Argument lies on the branch cut (-inf, 0] of E1.
class BranchCutError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Matrix dimension is zero or exceeds the configured cap.
class SizeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Base for failures of a numerical method on valid input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of panels; carries its best estimate.
class BudgetExceededError : public NumericalError {
 public:
  BudgetExceededError(const std::string& what, double best_estimate,
                      double abs_error_estimate)
      : NumericalError(what),
        best_estimate_(best_estimate),
        abs_error_estimate_(abs_error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double abs_error_estimate() const noexcept { return abs_error_estimate_; }

 private:
  double best_estimate_;
  double abs_error_estimate_;
};

class NonSymmetricError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace hankel
