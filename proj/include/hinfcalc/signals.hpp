#pragma once

#include <vector>

#include "hinfcalc/funcspec.hpp"
#include "hinfcalc/linops.hpp"
#include "hinfcalc/types.hpp"

namespace hinfcalc::signals {

/// Uniform causal grid. Sample k lives at the cell midpoint
/// t_k = (k + 1/2) * dt; the midpoint convention keeps jump discontinuities
/// of causal signals on cell boundaries, which is what makes the transform
/// quadrature second order and the discrete Riesz projection exact on
/// sampled signals.
struct TimeGrid {
  double dt = 0.0;
  int n_samples = 0;
  int pad_factor = 4;

  TimeGrid(double dt_, int n_samples_, int pad_factor_ = 4);

  int padded_size() const { return n_samples * pad_factor; }
  double horizon() const { return dt * n_samples; }
  double time_at(int k) const { return (k + 0.5) * dt; }

  /// Standard DFT bins of the padded grid, in DFT order (nonnegative
  /// frequencies first, then negative).
  std::vector<double> frequencies() const;

  /// Default grid for a generator: horizon 30 / |spectral abscissa|, so the
  /// slowest semigroup mode decays below ~1e-13 within the window.
  static TimeGrid for_generator(const linops::GeneratorMatrix& a, int n_samples = 1 << 14,
                                int pad_factor = 4);

  bool operator==(const TimeGrid&) const = default;
};

/// Causal vector-valued signal; values(k, j) is component j at time t_k.
struct Trajectory {
  TimeGrid grid;
  Eigen::MatrixXcd values;  // n_samples x dim
  bool horizon_warning = false;

  Eigen::Index dim() const { return values.cols(); }
};

/// Boundary-transform samples on the padded DFT bins.
struct SpectrumSamples {
  TimeGrid grid;
  std::vector<double> frequencies;  // padded_size entries
  Eigen::MatrixXcd values;          // padded_size x dim
  bool horizon_warning = false;

  Eigen::Index dim() const { return values.cols(); }
};

/// Discrete boundary Laplace transform along the imaginary axis:
/// F(i w_m) = dt * sum_j f(t_j) e^{-i w_m t_j} over the zero-padded grid.
/// A trajectory that has not decayed within the horizon (norm of the last
/// 1% of samples above 1e-8 of the total) gets a horizon warning flag.
SpectrumSamples laplace_boundary(const Trajectory& f);

/// Exact inverse of laplace_boundary, restricted to the causal window.
Trajectory inverse_laplace(const SpectrumSamples& spectrum);

/// Projection onto the transforms of causal signals: inverse transform,
/// zero the negative-time half of the padded circle, transform back.
/// Idempotent, and the identity on spectra of causal sampled signals.
SpectrumSamples riesz_project(const SpectrumSamples& spectrum);

/// Toeplitz multiplier: transform, multiply by g on the boundary, project,
/// invert, restrict to t >= 0.
Trajectory toeplitz_apply(const funcspec::FuncExpr& g, const Trajectory& f);

/// sqrt(dt * sum_k |f_k|^2), the discrete causal L2 norm.
double l2_norm(const Trajectory& f);

/// Boundary values g(i w_m) on the padded bins of a grid.
std::vector<Complex> boundary_values(const funcspec::FuncExpr& g, const TimeGrid& grid);

}  // namespace hinfcalc::signals
