#pragma once

#include <stdexcept>
#include <string>

namespace logharmonic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (|z| >= 1, r not in (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition on an input object does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The bracket [lo, hi] does not contain a sign change.
class NoRootError : public Error {
 public:
  using Error::Error;
};

/// A callback produced a non-finite value where a finite one was required.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// |omega(z)| >= 1 was encountered.
class DilatationError : public Error {
 public:
  using Error::Error;
};

/// Two maps cannot be combined (different dilatations or prefactors).
class IncompatibleMapsError : public Error {
 public:
  using Error::Error;
};

/// A denominator of the (pre-)Schwarzian vanishes.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// The Jacobian is negative where a sense-preserving map was required.
class SenseReversalError : public Error {
 public:
  using Error::Error;
};

}  // namespace logharmonic
