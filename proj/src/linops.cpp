#include "hinfcalc/linops.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace hinfcalc::linops {

namespace {

constexpr double kStabilityMargin = 1e-9;
constexpr double kSpectralRouteCondition = 1e6;
constexpr double kGramianRouteCondition = 1e8;
constexpr double kDegenerateSum = 1e-12;

void require_square_finite(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidInputError(std::string(what) + ": matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw InvalidInputError(std::string(what) + ": non-finite entries");
  }
}

Eigen::ComplexEigenSolver<Matrix> solve_eigen(const Matrix& m, bool vectors) {
  Eigen::ComplexEigenSolver<Matrix> solver(m, vectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigenvalue iteration failed to converge");
  }
  return solver;
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(Matrix entries) : entries_(std::move(entries)) {
  require_square_finite(entries_, "GeneratorMatrix");
  spectral_abscissa_ = linops::spectral_abscissa(entries_);
  if (!(spectral_abscissa_ < -kStabilityMargin)) {
    throw InvalidInputError("generator is not exponentially stable: spectral abscissa " +
                            std::to_string(spectral_abscissa_));
  }
}

Matrix expm(const Matrix& m) {
  require_square_finite(m, "expm");
  auto solver = solve_eigen(m, true);
  const Matrix& v = solver.eigenvectors();
  Eigen::FullPivLU<Matrix> lu(v);
  if (lu.isInvertible()) {
    const Matrix v_inv = lu.inverse();
    const double cond = operator_norm(v) * operator_norm(v_inv);
    if (cond <= kSpectralRouteCondition) {
      Vector exp_values = solver.eigenvalues().array().exp();
      return v * exp_values.asDiagonal() * v_inv;
    }
  }
  return m.exp();  // scaling-and-squaring Pade
}

Matrix matrix_exponential(const GeneratorMatrix& a, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidInputError("matrix_exponential: t must be finite and >= 0");
  }
  if (t == 0.0) {
    return Matrix::Identity(a.dim(), a.dim());
  }
  return expm(a.entries() * t);
}

Matrix sqrt_minus_a(const GeneratorMatrix& a) {
  const Matrix minus_a = -a.entries();
  auto solver = solve_eigen(minus_a, true);
  // Stability puts the spectrum of -A in the open right half-plane; a value
  // on the closed negative real axis would make the principal branch
  // ill-defined.
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const Complex lambda = solver.eigenvalues()(i);
    if (lambda.real() <= 0.0 && std::abs(lambda.imag()) < 1e-14) {
      throw NumericalError("sqrt_minus_a: eigenvalue on the closed negative real axis");
    }
  }
  const Matrix& v = solver.eigenvectors();
  Eigen::FullPivLU<Matrix> lu(v);
  if (lu.isInvertible()) {
    const Matrix v_inv = lu.inverse();
    if (operator_norm(v) * operator_norm(v_inv) <= kSpectralRouteCondition) {
      Vector roots = solver.eigenvalues().array().sqrt();  // principal branch
      const Matrix candidate = v * roots.asDiagonal() * v_inv;
      const double residual = operator_norm(candidate * candidate - minus_a);
      if (residual <= 1e-8 * operator_norm(minus_a)) {
        return candidate;
      }
    }
  }
  return minus_a.sqrt();  // Schur-based
}

Matrix resolvent(const GeneratorMatrix& a, Complex r) {
  const Eigen::Index n = a.dim();
  Matrix shifted = a.entries() - r * Matrix::Identity(n, n);
  Eigen::FullPivLU<Matrix> lu(shifted);
  if (!lu.isInvertible()) {
    throw NumericalError("resolvent: A - rI is numerically singular");
  }
  return lu.inverse();
}

GramianMatrix lyapunov_gram(const GeneratorMatrix& a, const Matrix& c) {
  const Eigen::Index n = a.dim();
  if (c.cols() != n) {
    throw InvalidInputError("lyapunov_gram: observation matrix has wrong column count");
  }
  if (!c.allFinite()) {
    throw InvalidInputError("lyapunov_gram: non-finite observation entries");
  }
  const Matrix rhs = c.adjoint() * c;

  Matrix x;
  bool solved = false;
  auto solver = solve_eigen(a.entries(), true);
  const Matrix& v = solver.eigenvectors();
  Eigen::FullPivLU<Matrix> lu(v);
  if (lu.isInvertible()) {
    const Matrix v_inv = lu.inverse();
    if (operator_norm(v) * operator_norm(v_inv) <= kGramianRouteCondition) {
      const Vector lambda = solver.eigenvalues();
      Matrix y = v.adjoint() * rhs * v;
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          const Complex denom = std::conj(lambda(i)) + lambda(j);
          if (std::abs(denom) < kDegenerateSum) {
            throw NumericalError("lyapunov_gram: near-degenerate eigenvalue sum");
          }
          y(i, j) /= -denom;
        }
      }
      const Matrix w = v_inv;
      x = w.adjoint() * y * w;
      solved = true;
    }
  }
  if (!solved) {
    if (n > 64) {
      throw NumericalError("lyapunov_gram: ill-conditioned eigenbasis and n > 64");
    }
    // Kronecker solve of (I (x) A* + A^T (x) I) vec(X) = -vec(C*C).
    Matrix k = Matrix::Zero(n * n, n * n);
    const Matrix a_star = a.entries().adjoint();
    for (Eigen::Index j = 0; j < n; ++j) {
      k.block(j * n, j * n, n, n) += a_star;
    }
    for (Eigen::Index bi = 0; bi < n; ++bi) {
      for (Eigen::Index bj = 0; bj < n; ++bj) {
        k.block(bi * n, bj * n, n, n) += a.entries()(bj, bi) * Matrix::Identity(n, n);
      }
    }
    Vector vec_rhs(n * n);
    for (Eigen::Index j = 0; j < n; ++j) vec_rhs.segment(j * n, n) = -rhs.col(j);
    Vector vec_x = k.fullPivLu().solve(vec_rhs);
    x.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) x.col(j) = vec_x.segment(j * n, n);
  }

  x = ((x + x.adjoint()) / 2.0).eval();  // enforce Hermitian symmetry
  const double residual =
      operator_norm(a.entries().adjoint() * x + x * a.entries() + rhs);
  const double scale = std::max(operator_norm(rhs), 1e-300);
  if (residual > 1e-8 * scale && residual > 1e-13) {
    throw NumericalError("lyapunov_gram: residual " + std::to_string(residual) +
                         " exceeds tolerance");
  }
  return GramianMatrix{std::move(x)};
}

double operator_norm(const Matrix& m) {
  if (!m.allFinite()) {
    throw InvalidInputError("operator_norm: non-finite entries");
  }
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double spectral_abscissa(const Matrix& m) {
  require_square_finite(m, "spectral_abscissa");
  auto solver = solve_eigen(m, false);
  return solver.eigenvalues().real().maxCoeff();
}

SpectralDecomposition spectral_decompose(const Matrix& m) {
  require_square_finite(m, "spectral_decompose");
  auto solver = solve_eigen(m, true);
  const Matrix& v = solver.eigenvectors();
  Eigen::FullPivLU<Matrix> lu(v);
  if (!lu.isInvertible()) {
    throw OracleUnavailableError("spectral_decompose: defective eigenvector basis");
  }
  Matrix v_inv = lu.inverse();
  const double condition = operator_norm(v) * operator_norm(v_inv);
  if (condition > 1e12) {
    throw OracleUnavailableError("spectral_decompose: eigenvector condition " +
                                 std::to_string(condition) + " (non-diagonalizable flag)");
  }
  return SpectralDecomposition{solver.eigenvalues(), v, std::move(v_inv), condition};
}

}  // namespace hinfcalc::linops
