#include "hinfcalc/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "hinfcalc/fft.hpp"

namespace hinfcalc::calculus {

namespace {

// Noise transported back by e^{-A t} grows like e^{mu t}; this budget caps
// the amplification of the discretization floor.
constexpr double kExtractionBudget = 2.5;
constexpr double kResidualLimit = 0.1;

double max_real_rate(const linops::GeneratorMatrix& a) {
  Eigen::ComplexEigenSolver<Matrix> solver(a.entries(), false);
  if (solver.info() != Eigen::Success) {
    return linops::operator_norm(a.entries());
  }
  return solver.eigenvalues().real().cwiseAbs().maxCoeff();
}

// Eight extraction indices: four window positions, each paired with its
// neighbor so that grid-frequency ringing cancels in the average.
std::vector<int> extraction_indices(const signals::TimeGrid& grid, double mu) {
  const double t_hi = std::min(grid.horizon() / 8.0, kExtractionBudget / mu);
  const int k_hi = static_cast<int>(std::floor(t_hi / grid.dt - 0.5));
  const int k_lo = std::max(k_hi / 2, 6);
  if (k_hi - k_lo < 8) {
    throw ConstructionError(
        "construct: grid too coarse to resolve the generator (extraction window [" +
        std::to_string(k_lo) + ", " + std::to_string(k_hi) + "])");
  }
  std::vector<int> indices;
  for (int i = 0; i < 4; ++i) {
    const int base =
        k_lo + static_cast<int>(std::llround((k_hi - 1.0 - k_lo) * i / 3.0));
    indices.push_back(base);
    indices.push_back(base + 1);
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

}  // namespace

signals::Trajectory semigroup_trajectory(const linops::GeneratorMatrix& a, const Vector& x0,
                                         const signals::TimeGrid& grid) {
  if (x0.size() != a.dim()) {
    throw InvalidInputError("semigroup_trajectory: initial state has wrong dimension");
  }
  const Matrix half_step = linops::expm(a.entries() * (grid.dt / 2.0));
  const Matrix step = linops::expm(a.entries() * grid.dt);

  signals::Trajectory f;
  f.grid = grid;
  f.values.resize(grid.n_samples, a.dim());
  Vector x = half_step * x0;
  for (int k = 0; k < grid.n_samples; ++k) {
    f.values.row(k) = x.transpose();
    x = step * x;
  }
  const int tail = std::max(1, grid.n_samples / 100);
  const double total = f.values.norm();
  if (total > 0.0 && f.values.bottomRows(tail).norm() > 1e-8 * total) {
    f.horizon_warning = true;
  }
  return f;
}

std::vector<CalculusResult> construct_batch(const linops::GeneratorMatrix& a,
                                            const std::vector<funcspec::FuncExpr>& gs,
                                            const signals::TimeGrid& grid) {
  const Eigen::Index n = a.dim();
  const int np = grid.padded_size();
  for (const auto& g : gs) {
    auto report = funcspec::certify_hinf(g);
    if (!report.passed) {
      throw CertificationError("construct: uncertified function: " + report.violation);
    }
  }

  const double mu = max_real_rate(a);
  const std::vector<int> indices = extraction_indices(grid, mu);
  const int n_extract = static_cast<int>(indices.size());

  std::vector<double> times(n_extract);
  std::vector<Matrix> back_transport(n_extract);
  for (int i = 0; i < n_extract; ++i) {
    times[i] = grid.time_at(indices[i]);
    back_transport[i] = linops::expm(a.entries() * (-times[i]));
  }

  // Inverse-transform rows evaluated only at the extraction indices. The
  // Riesz projection zeroes the negative-time half of the padded circle and
  // therefore does not touch these early samples, so the rows reproduce the
  // full multiplier pipeline exactly there.
  Matrix extract_rows(n_extract, np);
  for (int i = 0; i < n_extract; ++i) {
    for (int m = 0; m < np; ++m) {
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>(static_cast<long>(m) * indices[i] % np) /
          static_cast<double>(np);
      extract_rows(i, m) = std::polar(1.0 / np, angle);
    }
  }

  // Extraction rows with the boundary multiplier folded in, one block per
  // function; shared across all basis columns.
  std::vector<Matrix> extract_for_g;
  extract_for_g.reserve(gs.size());
  for (const auto& g : gs) {
    const std::vector<Complex> values = signals::boundary_values(g, grid);
    Matrix rows = extract_rows;
    for (int m = 0; m < np; ++m) rows.col(m) *= values[m];
    extract_for_g.push_back(std::move(rows));
  }

  const Matrix half_step = linops::expm(a.entries() * (grid.dt / 2.0));
  const Matrix step = linops::expm(a.entries() * grid.dt);
  auto plan = detail::fft_plan(static_cast<std::size_t>(np));

  bool horizon_warning = false;
  // candidates[gi][i] is the i-th extraction candidate for function gi.
  std::vector<std::vector<Matrix>> candidates(gs.size(),
                                              std::vector<Matrix>(n_extract, Matrix(n, n)));
  Matrix spectra(np, n);
  std::vector<Complex> buffer(np);
  for (Eigen::Index col = 0; col < n; ++col) {
    Vector x = half_step.col(col);
    Eigen::MatrixXcd traj(grid.n_samples, n);
    for (int k = 0; k < grid.n_samples; ++k) {
      traj.row(k) = x.transpose();
      x = step * x;
    }
    const int tail = std::max(1, grid.n_samples / 100);
    const double total = traj.norm();
    if (total > 0.0 && traj.bottomRows(tail).norm() > 1e-8 * total) {
      horizon_warning = true;
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      std::fill(buffer.begin(), buffer.end(), Complex(0.0));
      for (int k = 0; k < grid.n_samples; ++k) buffer[k] = traj(k, c);
      plan->forward(buffer.data());
      for (int m = 0; m < np; ++m) spectra(m, c) = buffer[m];
    }
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
      const Matrix y = extract_for_g[gi] * spectra;  // n_extract x n
      for (int i = 0; i < n_extract; ++i) {
        candidates[gi][i].col(col) = y.row(i).transpose();
      }
    }
  }

  std::vector<CalculusResult> results;
  results.reserve(gs.size());
  for (std::size_t gi = 0; gi < gs.size(); ++gi) {
    CalculusResult result;
    result.grid = grid;
    result.extraction_times = times;
    result.horizon_warning = horizon_warning;
    Matrix mean = Matrix::Zero(n, n);
    for (int i = 0; i < n_extract; ++i) {
      candidates[gi][i] = candidates[gi][i] * back_transport[i];
      mean += candidates[gi][i];
    }
    mean /= static_cast<double>(n_extract);
    double residual = 0.0;
    for (int i = 0; i < n_extract; ++i) {
      residual = std::max(residual, linops::operator_norm(candidates[gi][i] - mean));
    }
    residual /= std::max(linops::operator_norm(mean), 1e-12);
    if (residual > kResidualLimit) {
      throw ConstructionError("construct: extraction residual " + std::to_string(residual) +
                              " exceeds " + std::to_string(kResidualLimit) +
                              " (grid too coarse)");
    }
    result.value = std::move(mean);
    result.extraction_residual = residual;
    results.push_back(std::move(result));
  }
  return results;
}

CalculusResult construct(const linops::GeneratorMatrix& a, const funcspec::FuncExpr& g,
                         const signals::TimeGrid& grid) {
  return construct_batch(a, {g}, grid).front();
}

Matrix spectral_oracle(const linops::GeneratorMatrix& a, const funcspec::FuncExpr& g) {
  linops::SpectralDecomposition decomp = linops::spectral_decompose(a.entries());
  if (decomp.condition > 1e6) {
    throw OracleUnavailableError("spectral_oracle: eigenvector condition " +
                                 std::to_string(decomp.condition) + " exceeds 1e6");
  }
  Vector g_values(decomp.eigenvalues.size());
  for (Eigen::Index i = 0; i < decomp.eigenvalues.size(); ++i) {
    g_values(i) = funcspec::evaluate(g, decomp.eigenvalues(i));
  }
  return decomp.right_vectors * g_values.asDiagonal() * decomp.inverse_vectors;
}

Matrix hille_phillips(const linops::GeneratorMatrix& a, const KernelFunction& h, int nodes) {
  if (!(h.support_extent > 0.0) || !h.values) {
    throw InvalidInputError("hille_phillips: kernel needs positive support and a closure");
  }
  if (nodes < 3 || nodes % 2 == 0) {
    throw InvalidInputError("hille_phillips: composite Simpson needs an odd node count >= 3");
  }
  const Eigen::Index n = a.dim();
  const double extent = h.support_extent;
  const double delta = extent / (nodes - 1);

  // e^{-A tau} at tau = -extent + i*delta, advanced by one factor per node.
  Matrix point = linops::expm(a.entries() * extent);
  const Matrix advance = linops::expm(a.entries() * (-delta));

  double abs_integral = 0.0;
  Matrix sum = Matrix::Zero(n, n);
  for (int i = 0; i < nodes; ++i) {
    const double tau = -extent + i * delta;
    const double weight = (i == 0 || i == nodes - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const Complex h_tau = h.values(tau);
    if (!std::isfinite(h_tau.real()) || !std::isfinite(h_tau.imag())) {
      throw InvalidInputError("hille_phillips: kernel value not finite");
    }
    sum += (weight * h_tau) * point;
    abs_integral += weight * std::abs(h_tau);
    point = point * advance;
  }
  abs_integral *= delta / 3.0;
  if (!std::isfinite(abs_integral)) {
    throw InvalidInputError("hille_phillips: kernel is not integrable on its support");
  }
  return (delta / 3.0) * sum;
}

double semigroup_norm(const linops::GeneratorMatrix& a, const Matrix& g_of_a, double eps) {
  if (!(eps > 0.0)) {
    throw InvalidInputError("semigroup_norm: eps must be positive");
  }
  return linops::operator_norm(g_of_a * linops::matrix_exponential(a, eps));
}

namespace {

double shifted_gram_top(const linops::GeneratorMatrix& a, double eps) {
  const Matrix root = linops::sqrt_minus_a(a);
  const Matrix gram = linops::lyapunov_gram(a, root).entries;
  const Matrix shift = linops::matrix_exponential(a, eps);
  Matrix shifted = shift.adjoint() * gram * shift;
  shifted = ((shifted + shifted.adjoint()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(shifted);
  return std::max(solver.eigenvalues().maxCoeff(), 0.0);
}

}  // namespace

CertificateEq6 proof_certificate(const linops::GeneratorMatrix& a, double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw InvalidInputError("proof_certificate: eps must be finite and >= 0");
  }
  CertificateEq6 certificate;
  certificate.kappa = std::sqrt(shifted_gram_top(a, eps));
  certificate.kappa_star = std::sqrt(shifted_gram_top(a.adjoint(), eps));
  certificate.bound = 2.0 * certificate.kappa * certificate.kappa_star;
  return certificate;
}

AnalyticityConstants fit_analyticity(const linops::GeneratorMatrix& a,
                                     std::optional<double> omega) {
  const double w = omega.value_or(std::abs(a.spectral_abscissa()) / 2.0);
  if (!(w >= 0.0)) {
    throw InvalidInputError("fit_analyticity: omega must be >= 0");
  }
  const double horizon = 30.0 / std::abs(a.spectral_abscissa());
  const Matrix root = linops::sqrt_minus_a(a);

  // Log-spaced grid so the fit resolves the maximizer t* ~ 1/(2|lambda|)
  // with scale-independent relative accuracy.
  constexpr int kPoints = 8192;
  const double t_min = std::max(1e-12, horizon * 1e-9);
  const double log_min = std::log(t_min);
  const double log_max = std::log(horizon);

  bool spectral_route = true;
  linops::SpectralDecomposition decomp;
  try {
    decomp = linops::spectral_decompose(a.entries());
    spectral_route = decomp.condition <= 1e8;
  } catch (const OracleUnavailableError&) {
    spectral_route = false;
  }

  double best = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double t =
        std::exp(log_min + (log_max - log_min) * static_cast<double>(i) / (kPoints - 1));
    Matrix propagator;
    if (spectral_route) {
      Vector exps = (decomp.eigenvalues.array() * t).exp();
      propagator = decomp.right_vectors * exps.asDiagonal() * decomp.inverse_vectors;
    } else {
      propagator = linops::expm(a.entries() * t);
    }
    const double value = std::sqrt(t) * std::exp(w * t) * linops::operator_norm(root * propagator);
    best = std::max(best, value);
  }
  return AnalyticityConstants{best, w};
}

}  // namespace hinfcalc::calculus
