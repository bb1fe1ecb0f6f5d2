#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sniep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A spectrum contains NaN/infinity, or is not in the required order.
class InvalidSpectrum : public Error {
 public:
  using Error::Error;
};

/// A construction was requested for a spectrum that does not meet the
/// hypotheses of the pattern. `failed()` lists the violated conditions.
class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(std::vector<std::string> failed);

  const std::vector<std::string>& failed() const noexcept { return failed_; }

 private:
  std::vector<std::string> failed_;
};

/// The scalar u vanishes, so the A-pattern is undefined.
class DegenerateU : public Error {
 public:
  using Error::Error;
};

/// A square-root entry would be taken of a negative number.
class NegativeRadicand : public Error {
 public:
  using Error::Error;
};

class DegenerateLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

/// Jacobi sweeps exhausted before the off-diagonal mass vanished.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NotTraceZero : public Error {
 public:
  using Error::Error;
};

/// The region sampler found no feasible grid point for any requested trace.
class EmptyGrid : public Error {
 public:
  using Error::Error;
};

}  // namespace sniep
