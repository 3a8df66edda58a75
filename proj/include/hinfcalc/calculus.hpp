#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hinfcalc/funcspec.hpp"
#include "hinfcalc/linops.hpp"
#include "hinfcalc/signals.hpp"

namespace hinfcalc::calculus {

/// g(A) recovered from Toeplitz-multiplied semigroup trajectories, with the
/// spread of the per-time extraction candidates as a quality figure.
struct CalculusResult {
  Matrix value;  // the constructed g(A)
  double extraction_residual = 0.0;
  signals::TimeGrid grid{1.0, 16, 1};
  std::vector<double> extraction_times;
  bool horizon_warning = false;
};

/// Integrable kernel supported on [-support_extent, 0].
struct KernelFunction {
  double support_extent = 1.0;
  std::function<Complex(double)> values;  // h(tau) for tau in [-support_extent, 0]
};

struct CertificateEq6 {
  double kappa = 0.0;       // shifted square-root Gramian constant for A
  double kappa_star = 0.0;  // same for the adjoint generator
  double bound = 0.0;       // 2 * kappa * kappa_star
};

struct AnalyticityConstants {
  double smoothing_constant = 0.0;  // M in ||sqrt(-A) e^{At}|| <= M t^{-1/2} e^{-omega t}
  double omega = 0.0;
};

/// Samples t -> e^{A t} x0 on the grid midpoints.
signals::Trajectory semigroup_trajectory(const linops::GeneratorMatrix& a, const Vector& x0,
                                         const signals::TimeGrid& grid);

/// Builds g(A) columnwise: for each basis vector e_j the Toeplitz multiplier
/// is applied to the semigroup trajectory of e_j, and the outputs at a set of
/// early extraction times t_k are transported back by e^{-A t_k} and
/// averaged. The extraction window is capped so that transporting back
/// amplifies the pipeline noise floor by at most e^{2.5}. Throws
/// ConstructionError when the grid cannot resolve the generator or the
/// candidate spread exceeds 0.1.
CalculusResult construct(const linops::GeneratorMatrix& a, const funcspec::FuncExpr& g,
                         const signals::TimeGrid& grid);

/// Same as construct for several functions at once; the trajectories and
/// their forward transforms are shared across the batch.
std::vector<CalculusResult> construct_batch(const linops::GeneratorMatrix& a,
                                            const std::vector<funcspec::FuncExpr>& gs,
                                            const signals::TimeGrid& grid);

/// Independent oracle: V diag(g(lambda_j)) V^{-1}. Refuses generators whose
/// eigenvector condition exceeds 1e6.
Matrix spectral_oracle(const linops::GeneratorMatrix& a, const funcspec::FuncExpr& g);

/// Composite-Simpson quadrature of the convolution representation
/// g(A) = integral of h(tau) e^{-A tau} over [-support, 0].
Matrix hille_phillips(const linops::GeneratorMatrix& a, const KernelFunction& h,
                      int nodes = 4097);

/// ||g(A) e^{A eps}|| for a previously constructed g(A).
double semigroup_norm(const linops::GeneratorMatrix& a, const Matrix& g_of_a, double eps);

/// Computable Cauchy-Schwarz certificate: bound = 2 kappa*(eps) kappa(eps)
/// with kappa(eps)^2 the top eigenvalue of the eps-shifted square-root
/// Gramian. For every bounded-analytic g,
///   ||g(A) e^{2 A eps}|| <= bound * sup|g|.
CertificateEq6 proof_certificate(const linops::GeneratorMatrix& a, double eps);

/// Fits the smoothing constant M on a log-spaced time grid. omega defaults
/// to half the stability margin; pass 0 to fit the unweighted form.
AnalyticityConstants fit_analyticity(const linops::GeneratorMatrix& a,
                                     std::optional<double> omega = std::nullopt);

}  // namespace hinfcalc::calculus
