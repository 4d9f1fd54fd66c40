#pragma once

#include <stdexcept>
#include <string>

namespace mbspec {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid parameter values (grid sizes, truncation radii, norm orders, config keys).
struct ConfigError : Error {
  using Error::Error;
};

/// API misuse: rank mismatches, time regressions, malformed call sequences.
struct UsageError : Error {
  using Error::Error;
};

/// Rejected input data: non-finite samples, corrupt or truncated containers.
struct DataError : Error {
  using Error::Error;
};

/// A stated operation contract was violated by the operands
/// (non-solenoidal advecting field, support outside the dealias-safe region).
struct ContractError : Error {
  using Error::Error;
};

/// Numerical blow-up / instability detected during time integration.
struct InstabilityError : Error {
  InstabilityError(const std::string& what, double t_blow)
      : Error(what), t(t_blow) {}
  double t;  ///< simulation time at which the flag fired
};

}  // namespace mbspec
