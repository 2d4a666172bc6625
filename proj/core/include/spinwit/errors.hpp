#pragma once

#include <stdexcept>
#include <string>

namespace spinwit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Requested dimension exceeds the configured maximum.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Scalar argument outside its admissible range, or non-finite data.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input violates a documented precondition (Hermiticity, unitarity, normalization).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Odd local dimension: no unitary skew-symmetric V exists.
class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed state file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed matrix that is not a valid density matrix / pure state.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinwit
