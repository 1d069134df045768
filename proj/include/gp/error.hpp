#pragma once

#include <stdexcept>
#include <string>

namespace gp {

  // Base of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed or semantically invalid input (unknown vertex, bad JSON, ...).
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // Word-level operation requested on a group that has no element arithmetic.
  class UnsupportedOperation : public InputError {
   public:
    using InputError::InputError;
  };

  // An opaque vertex group lacks the finite/hyperbolic flag a decision needs.
  class MissingMetadata : public InputError {
   public:
    using InputError::InputError;
  };

  // The caller broke an operation's documented precondition.
  class PreconditionViolation : public InputError {
   public:
    using InputError::InputError;
  };

  // A configured size or radius cap was hit.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

}  // namespace gp
