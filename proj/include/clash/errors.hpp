#pragma once

#include <stdexcept>
#include <string>

namespace clash {

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes disagree (vector lengths, matrix dimensions, index bounds).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A sparsity model cannot be realized on the requested dimensions.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read, written, or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace clash
