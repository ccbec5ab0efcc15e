#pragma once

#include <stdexcept>
#include <string>

namespace abel {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (zero divisor, field mismatch,
/// endpoint conditions, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Malformed textual or JSON input. The message names the offending field.
struct InputError : Error {
  using Error::Error;
};

/// A computation could not produce a certified answer, e.g. a moment kernel
/// that did not stabilize.
struct ComputeError : Error {
  using Error::Error;
};

}  // namespace abel
