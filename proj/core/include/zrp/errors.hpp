#pragma once

#include <stdexcept>
#include <string>

namespace zrp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range argument (sizes, indices, intervals).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Physically inconsistent model parameters.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Linear system too close to singular to be solved reliably.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, double rcond)
      : Error(what), rcond_(rcond) {}

  /// Reciprocal condition estimate at the time of failure.
  double rcond() const noexcept { return rcond_; }

 private:
  double rcond_;
};

/// Requested quantity needs an open channel but the channel is closed.
class ClosedChannelError : public Error {
 public:
  ClosedChannelError(const std::string& what, int channel, double energy)
      : Error(what), channel_(channel), energy_(energy) {}

  int channel() const noexcept { return channel_; }
  /// Incident energy in hartree.
  double energy() const noexcept { return energy_; }

 private:
  int channel_;
  double energy_;
};

/// Partial-wave sum failed to meet its tail criterion.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace zrp
