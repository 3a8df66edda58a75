#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hinfcalc {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad matrix file, non-finite entries,
/// unstable generator, invalid grid).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Parse failure; carries the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Expression is syntactically valid but not a certified member of the
/// bounded-analytic-function algebra (pole in the closed left half-plane,
/// negative exponential coefficient, unsupported denominator).
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point too close to a certified pole.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: singular system, ill-conditioned eigenvalue sums.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Spectral oracle refused (non-diagonalizable or eigenvector condition
/// number too large for trustworthy results).
class OracleUnavailableError : public Error {
 public:
  using Error::Error;
};

/// Trajectory-based construction failed; the grid is too coarse for the
/// requested generator/function pair.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A checked runtime invariant was violated (sweep certificate breach).
class InvariantBreachError : public Error {
 public:
  using Error::Error;
};

}  // namespace hinfcalc
