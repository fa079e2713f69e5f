#pragma once

#include <stdexcept>
#include <string>

namespace mfhnp {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tensor shapes or data widths do not conform.
struct ShapeError : Error {
  using Error::Error;
};

/// An argument is outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

/// A forward operation produced NaN or Inf.
struct NonFiniteError : Error {
  using Error::Error;
};

/// Misuse of the differentiation tape (detached tensor, non-scalar loss,
/// repeated backward).
struct TapeError : Error {
  using Error::Error;
};

/// Multi-fidelity data that must be paired is missing its counterpart.
struct PairingError : Error {
  using Error::Error;
};

/// File format, version, or serialization failure.
struct IoError : Error {
  using Error::Error;
};

/// Invalid configuration or infeasible request.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace mfhnp
