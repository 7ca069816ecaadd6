#pragma once

#include <stdexcept>
#include <string>

namespace photonqm {

/// Base for every error raised by the library. Each subclass maps onto one
/// CLI exit status (see ExitCode in runner.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an API contract: mismatched grids, wrong value count, too
/// few time samples.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (omega <= 0,
/// epsilon <= 0, frequency outside a tabulated range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A physical/numerical invariant does not hold for the input: band limit,
/// divergence-free condition, normalization, transversality.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Requested operation exists but not for this configuration (curl on a 1-D
/// grid, dispersive RS evolution with mu != 1).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Explicit integrator asked to step beyond its stability limit.
class StabilityError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace photonqm
