#pragma once

#include "hinfcalc/errors.hpp"
#include "hinfcalc/types.hpp"

namespace hinfcalc::linops {

/// Square complex matrix validated as the generator of an exponentially
/// stable semigroup: finite entries and spectral abscissa < -1e-9.
class GeneratorMatrix {
 public:
  explicit GeneratorMatrix(Matrix entries);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  double spectral_abscissa() const { return spectral_abscissa_; }

  /// Conjugate-transposed generator; stability is inherited.
  GeneratorMatrix adjoint() const { return GeneratorMatrix(entries_.adjoint()); }

 private:
  Matrix entries_;
  double spectral_abscissa_;
};

struct SpectralDecomposition {
  Vector eigenvalues;
  Matrix right_vectors;    // V
  Matrix inverse_vectors;  // V^{-1}
  double condition;        // ||V|| * ||V^{-1}||
};

/// Hermitian positive-semidefinite solution of A*X + XA = -C*C.
struct GramianMatrix {
  Matrix entries;
};

/// Principal matrix exponential of an arbitrary square complex matrix.
/// Eigendecomposition route when the eigenvector basis is well conditioned,
/// scaling-and-squaring Pade otherwise.
Matrix expm(const Matrix& m);

/// e^{At} for t >= 0.
Matrix matrix_exponential(const GeneratorMatrix& a, double t);

/// Principal square root of -A; all eigenvalues of the result have
/// positive real part.
Matrix sqrt_minus_a(const GeneratorMatrix& a);

/// (A - rI)^{-1} for Re r > 0.
Matrix resolvent(const GeneratorMatrix& a, Complex r);

/// Observability Gramian: X = integral of e^{A*t} C*C e^{At} dt over t >= 0.
GramianMatrix lyapunov_gram(const GeneratorMatrix& a, const Matrix& c);

/// Largest singular value.
double operator_norm(const Matrix& m);

/// Maximum real part of the spectrum.
double spectral_abscissa(const Matrix& m);

/// Eigendecomposition with eigenvector condition estimate. Throws
/// OracleUnavailableError when condition > 1e12 (treated as
/// non-diagonalizable at working precision).
SpectralDecomposition spectral_decompose(const Matrix& m);

}  // namespace hinfcalc::linops
