#pragma once

#include <stdexcept>
#include <string>

namespace aubench {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed config file, schema descriptor or CLI argument.
struct ConfigError : Error {
  using Error::Error;
};

// Bad annotation row, invariant violation or infeasible spec.
struct DataError : Error {
  using Error::Error;
};

// Rejected access to a sealed test set while in guarded mode.
struct SealedAccessError : Error {
  using Error::Error;
};

}  // namespace aubench
