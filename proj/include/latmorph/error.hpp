#pragma once

#include <stdexcept>
#include <string>

namespace latmorph {

// Base for every error the library raises. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A point was expected to lie in a pixel set / image domain and does not.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (dot diagrams, grids, PGM, JSON recipes).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid argument values: lo > hi, missing origin, negative pixel values, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured pixel cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A structuring-element sequence failed verification and was not forced.
class UnverifiedSequence : public Error {
 public:
  using Error::Error;
};

}  // namespace latmorph
