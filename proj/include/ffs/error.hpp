#pragma once

#include <stdexcept>
#include <string>

namespace fqg {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied parameters failed (bad p, dimension
/// mismatch, non-square radius, ...). Surfaces as a usage error in the CLI.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration or work budget would be exceeded. The message names the
/// alternative mode (formula or sampling) the caller should switch to.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed; indicates a construction bug rather than
/// bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace fqg
