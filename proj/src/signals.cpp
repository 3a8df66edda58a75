#include "hinfcalc/signals.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hinfcalc/fft.hpp"

namespace hinfcalc::signals {

namespace {

bool is_power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }

std::vector<Complex> half_sample_phase(const std::vector<double>& freqs, double dt, double sign) {
  std::vector<Complex> phase(freqs.size());
  for (std::size_t m = 0; m < freqs.size(); ++m) {
    phase[m] = std::polar(1.0, sign * freqs[m] * dt / 2.0);
  }
  return phase;
}

}  // namespace

TimeGrid::TimeGrid(double dt_, int n_samples_, int pad_factor_)
    : dt(dt_), n_samples(n_samples_), pad_factor(pad_factor_) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidInputError("TimeGrid: dt must be positive and finite");
  }
  if (n_samples < 16 || !is_power_of_two(n_samples)) {
    throw InvalidInputError("TimeGrid: n_samples must be a power of two >= 16");
  }
  if (pad_factor < 1 || !is_power_of_two(static_cast<long>(pad_factor) * n_samples)) {
    throw InvalidInputError("TimeGrid: padded length must be a power of two");
  }
}

std::vector<double> TimeGrid::frequencies() const {
  const int np = padded_size();
  std::vector<double> freqs(np);
  const double base = 2.0 * std::numbers::pi / (np * dt);
  for (int m = 0; m < np; ++m) {
    const int signed_bin = m < np / 2 ? m : m - np;
    freqs[m] = base * signed_bin;
  }
  return freqs;
}

TimeGrid TimeGrid::for_generator(const linops::GeneratorMatrix& a, int n_samples,
                                 int pad_factor) {
  const double horizon = 30.0 / std::abs(a.spectral_abscissa());
  return TimeGrid(horizon / n_samples, n_samples, pad_factor);
}

SpectrumSamples laplace_boundary(const Trajectory& f) {
  if (!f.values.allFinite()) {
    throw InvalidInputError("laplace_boundary: non-finite trajectory values");
  }
  if (f.values.rows() != f.grid.n_samples) {
    throw InvalidInputError("laplace_boundary: trajectory length does not match grid");
  }
  const int n = f.grid.n_samples;
  const int np = f.grid.padded_size();
  const Eigen::Index dim = f.dim();

  bool warning = f.horizon_warning;
  const int tail = std::max(1, n / 100);
  const double total = f.values.norm();
  if (f.values.bottomRows(tail).norm() > 1e-8 * total && total > 0.0) {
    warning = true;  // trajectory not decayed at the horizon
  }

  SpectrumSamples spectrum;
  spectrum.grid = f.grid;
  spectrum.frequencies = f.grid.frequencies();
  spectrum.values.resize(np, dim);
  spectrum.horizon_warning = warning;

  auto plan = detail::fft_plan(static_cast<std::size_t>(np));
  const std::vector<Complex> phase = half_sample_phase(spectrum.frequencies, f.grid.dt, -1.0);
  std::vector<Complex> buffer(np);
  for (Eigen::Index j = 0; j < dim; ++j) {
    std::fill(buffer.begin(), buffer.end(), Complex(0.0));
    for (int k = 0; k < n; ++k) buffer[k] = f.values(k, j);
    plan->forward(buffer.data());
    for (int m = 0; m < np; ++m) {
      spectrum.values(m, j) = f.grid.dt * phase[m] * buffer[m];
    }
  }
  return spectrum;
}

namespace {

// Padded time samples of the spectrum's inverse transform.
Eigen::MatrixXcd inverse_padded(const SpectrumSamples& spectrum) {
  const int np = spectrum.grid.padded_size();
  if (spectrum.values.rows() != np) {
    throw InvalidInputError("inverse transform: spectrum length does not match grid");
  }
  auto plan = detail::fft_plan(static_cast<std::size_t>(np));
  const std::vector<Complex> phase =
      half_sample_phase(spectrum.frequencies, spectrum.grid.dt, +1.0);
  Eigen::MatrixXcd out(np, spectrum.dim());
  std::vector<Complex> buffer(np);
  for (Eigen::Index j = 0; j < spectrum.dim(); ++j) {
    for (int m = 0; m < np; ++m) buffer[m] = spectrum.values(m, j) * phase[m] / spectrum.grid.dt;
    plan->inverse(buffer.data());
    for (int m = 0; m < np; ++m) out(m, j) = buffer[m];
  }
  return out;
}

}  // namespace

Trajectory inverse_laplace(const SpectrumSamples& spectrum) {
  Eigen::MatrixXcd padded = inverse_padded(spectrum);
  Trajectory f;
  f.grid = spectrum.grid;
  f.values = padded.topRows(spectrum.grid.n_samples);
  f.horizon_warning = spectrum.horizon_warning;
  return f;
}

SpectrumSamples riesz_project(const SpectrumSamples& spectrum) {
  const int np = spectrum.grid.padded_size();
  Eigen::MatrixXcd padded = inverse_padded(spectrum);
  padded.bottomRows(np - np / 2).setZero();  // negative-time half of the circle

  auto plan = detail::fft_plan(static_cast<std::size_t>(np));
  const std::vector<Complex> phase =
      half_sample_phase(spectrum.frequencies, spectrum.grid.dt, -1.0);
  SpectrumSamples out;
  out.grid = spectrum.grid;
  out.frequencies = spectrum.frequencies;
  out.values.resize(np, spectrum.dim());
  out.horizon_warning = spectrum.horizon_warning;
  std::vector<Complex> buffer(np);
  for (Eigen::Index j = 0; j < spectrum.dim(); ++j) {
    for (int m = 0; m < np; ++m) buffer[m] = padded(m, j);
    plan->forward(buffer.data());
    for (int m = 0; m < np; ++m) out.values(m, j) = spectrum.grid.dt * phase[m] * buffer[m];
  }
  return out;
}

std::vector<Complex> boundary_values(const funcspec::FuncExpr& g, const TimeGrid& grid) {
  const std::vector<double> freqs = grid.frequencies();
  std::vector<Complex> values(freqs.size());
  for (std::size_t m = 0; m < freqs.size(); ++m) {
    values[m] = funcspec::evaluate(g, Complex(0.0, freqs[m]));
  }
  return values;
}

Trajectory toeplitz_apply(const funcspec::FuncExpr& g, const Trajectory& f) {
  const int n = f.grid.n_samples;
  const int np = f.grid.padded_size();
  const Eigen::Index dim = f.dim();
  if (!f.values.allFinite()) {
    throw InvalidInputError("toeplitz_apply: non-finite trajectory values");
  }
  if (f.values.rows() != n) {
    throw InvalidInputError("toeplitz_apply: trajectory length does not match grid");
  }

  bool warning = f.horizon_warning;
  const int tail = std::max(1, n / 100);
  const double total = f.values.norm();
  if (total > 0.0 && f.values.bottomRows(tail).norm() > 1e-8 * total) {
    warning = true;
  }

  auto plan = detail::fft_plan(static_cast<std::size_t>(np));
  // The half-sample phases of the transform pair cancel; the pipeline is a
  // plain DFT multiplier once both ends use midpoint sampling. The
  // bit-reversed fast path skips both reorder passes.
  const std::vector<Complex> multiplier = plan->to_bitrev(boundary_values(g, f.grid));

  Trajectory out;
  out.grid = f.grid;
  out.values.resize(n, dim);
  out.horizon_warning = warning;
  std::vector<Complex> buffer(np);
  for (Eigen::Index j = 0; j < dim; ++j) {
    std::fill(buffer.begin(), buffer.end(), Complex(0.0));
    for (int k = 0; k < n; ++k) buffer[k] = f.values(k, j);
    plan->forward_bitrev(buffer.data());
    for (int m = 0; m < np; ++m) buffer[m] *= multiplier[m];
    plan->inverse_bitrev(buffer.data());
    // Restriction to t >= 0 subsumes the projection here: the zeroed
    // negative-time half is dropped along with the padding.
    for (int k = 0; k < n; ++k) out.values(k, j) = buffer[k];
  }
  return out;
}

double l2_norm(const Trajectory& f) {
  if (!f.values.allFinite()) {
    throw InvalidInputError("l2_norm: non-finite trajectory values");
  }
  return std::sqrt(f.grid.dt) * f.values.norm();
}

}  // namespace hinfcalc::signals
