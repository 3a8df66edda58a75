#include "hinfcalc/admissibility.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

namespace hinfcalc::admissibility {

namespace {

void require_observation(const linops::GeneratorMatrix& a, const Matrix& c) {
  if (c.cols() != a.dim() || c.rows() < 1) {
    throw InvalidInputError("observation matrix shape does not match the generator");
  }
  if (!c.allFinite()) {
    throw InvalidInputError("observation matrix has non-finite entries");
  }
}

double top_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(((hermitian + hermitian.adjoint()) / 2.0).eval());
  return std::max(solver.eigenvalues().maxCoeff(), 0.0);
}

double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
}

Vector random_unit(std::mt19937_64& rng, Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(uniform_pm1(rng), uniform_pm1(rng));
  const double norm = v.norm();
  return norm > 0.0 ? Vector(v / norm) : Vector(Vector::Unit(n, 0));
}

}  // namespace

Report gramian(const linops::GeneratorMatrix& a, const Matrix& c,
               const std::string& generator_id, const std::string& observation_id) {
  require_observation(a, c);
  const Matrix x = linops::lyapunov_gram(a, c).entries;
  return Report{std::sqrt(top_eigenvalue(x)), Method::kGramian, generator_id, observation_id};
}

Report quadrature(const linops::GeneratorMatrix& a, const Matrix& c,
                  const signals::TimeGrid& grid, const std::string& generator_id,
                  const std::string& observation_id, std::uint64_t seed) {
  require_observation(a, c);
  const Eigen::Index n = a.dim();
  const Matrix half_step = linops::expm(a.entries() * (grid.dt / 2.0));
  const Matrix step = linops::expm(a.entries() * grid.dt);
  const Matrix step_adj = step.adjoint();
  const Matrix half_adj = half_step.adjoint();
  const Matrix cc = c.adjoint() * c;

  // One pass of the discrete Gramian: v -> dt * sum_k e^{A* t_k} C*C e^{A t_k} v.
  const auto apply_gram = [&](const Vector& v) {
    std::vector<Vector> states(grid.n_samples);
    Vector x = half_step * v;
    for (int k = 0; k < grid.n_samples; ++k) {
      states[k] = x;
      x = step * x;
    }
    Vector acc = cc * states[grid.n_samples - 1];
    for (int k = grid.n_samples - 2; k >= 0; --k) {
      acc = cc * states[k] + step_adj * acc;
    }
    return Vector(grid.dt * (half_adj * acc));
  };

  // Probe set: canonical basis plus seeded random unit vectors; each probe
  // gives a lower bound through the quadratic form.
  std::mt19937_64 rng(seed);
  std::vector<Vector> probes;
  for (Eigen::Index j = 0; j < n; ++j) probes.push_back(Vector::Unit(n, j));
  for (int r = 0; r < 8; ++r) probes.push_back(random_unit(rng, n));

  double best = 0.0;
  Vector best_probe = probes.front();
  for (const Vector& probe : probes) {
    const double value = std::real(probe.dot(apply_gram(probe)));
    if (value > best) {
      best = value;
      best_probe = probe;
    }
  }

  Vector v = best_probe;
  double rayleigh = best;
  for (int iteration = 0; iteration < 50; ++iteration) {
    Vector w = apply_gram(v);
    const double norm = w.norm();
    if (norm <= 0.0) {
      rayleigh = 0.0;
      break;
    }
    v = w / norm;
    rayleigh = std::real(v.dot(apply_gram(v)));
  }
  return Report{std::sqrt(std::max(rayleigh, best)), Method::kQuadrature, generator_id,
                observation_id};
}

IntertwiningReport check_intertwining(const linops::GeneratorMatrix& a, const Matrix& c,
                                      const funcspec::FuncExpr& g,
                                      const signals::TimeGrid& grid) {
  require_observation(a, c);
  const Eigen::Index n = a.dim();
  const calculus::CalculusResult constructed = calculus::construct(a, g, grid);
  const Matrix composed = c * constructed.value;
  const double scale = std::max(linops::operator_norm(composed), 1e-12);

  std::vector<int> window;
  for (double t : constructed.extraction_times) {
    window.push_back(static_cast<int>(std::llround(t / grid.dt - 0.5)));
  }

  std::mt19937_64 rng(777);
  std::vector<Vector> probes;
  for (Eigen::Index j = 0; j < n; ++j) probes.push_back(Vector::Unit(n, j));
  for (int r = 0; r < 4; ++r) probes.push_back(random_unit(rng, n));

  double deviation = 0.0;
  for (const Vector& x0 : probes) {
    const signals::Trajectory state = calculus::semigroup_trajectory(a, x0, grid);
    signals::Trajectory observed;
    observed.grid = grid;
    observed.values = state.values * c.transpose();
    observed.horizon_warning = state.horizon_warning;
    const signals::Trajectory lhs = signals::toeplitz_apply(g, observed);
    for (int k : window) {
      const Vector rhs = composed * state.values.row(k).transpose();
      const double err = (lhs.values.row(k).transpose() - rhs).norm();
      deviation = std::max(deviation, err / scale);
    }
  }

  IntertwiningReport report;
  report.max_deviation = deviation;
  report.kappa_composed = gramian(a, composed).kappa;
  report.passed = deviation <= 1e-2;
  return report;
}

std::pair<Report, Report> sqrt_profile(const linops::GeneratorMatrix& a) {
  const linops::GeneratorMatrix adj = a.adjoint();
  Report direct = gramian(a, linops::sqrt_minus_a(a), {}, "sqrt(-A)");
  Report dual = gramian(adj, linops::sqrt_minus_a(adj), {}, "sqrt(-A*)");
  return {std::move(direct), std::move(dual)};
}

}  // namespace hinfcalc::admissibility
