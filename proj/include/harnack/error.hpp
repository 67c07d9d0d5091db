#pragma once

#include <stdexcept>
#include <string>

namespace harnack {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad shape, sign, ordering...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An iterative method failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace harnack
