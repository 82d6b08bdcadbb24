#pragma once

#include <stdexcept>
#include <string>

namespace cesaro {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: dimension mismatch, parameter outside its admissible range.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A point or parameter lies outside the domain of a map (|z| >= 1, t <= -1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a singular point, e.g. green(a, a).
class SingularInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A function returned a non-finite value at a quadrature or scan node.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// An adaptive rule hit its refinement limit; carries the best estimate so far.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate_re, double best_estimate_im,
                double error_estimate)
      : Error(what), re_(best_estimate_re), im_(best_estimate_im), err_(error_estimate) {}

  double best_re() const noexcept { return re_; }
  double best_im() const noexcept { return im_; }
  double error_estimate() const noexcept { return err_; }

 private:
  double re_;
  double im_;
  double err_;
};

}  // namespace cesaro
