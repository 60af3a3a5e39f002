#pragma once

#include <stdexcept>
#include <string>

namespace entchain {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad inputs: malformed matrices, states, tuples, parameters, files.
/// CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine failed to reach its tolerance.
/// CLI maps these to exit code 3.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class NonHermitianInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NegativeEigenvalue : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IndexOutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnnormalizedState : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class FormViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class OutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ConstraintViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BadNormalization : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidTuple : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TooLarge : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class RelaxedModeUnsupported : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidParameters : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NoConvergence : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

class NoRoot : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

}  // namespace entchain
