#pragma once

#include <stdexcept>
#include <string>

namespace fraisse {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range indices, signature mismatches, bad JSON.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A requested size exceeds a configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal invariant that the theory guarantees was observed to fail.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace fraisse
