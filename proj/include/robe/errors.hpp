#pragma once

#include <stdexcept>
#include <string>

namespace robe {

// Numerical failures. Input validation uses std::domain_error; the CLI maps
// std::domain_error to exit code 1 and NumericalError subclasses to exit code 2.

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation at (or across) the point-mass singularity r2 = 0.
class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A root bracket whose endpoints do not straddle a sign change.
class NoSignChangeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// An iteration that failed to reach its tolerance (root polish, step underflow).
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A quadratic whose real roots were requested but do not exist.
class NoRealRootError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace robe
