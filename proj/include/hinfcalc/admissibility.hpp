#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "hinfcalc/calculus.hpp"
#include "hinfcalc/linops.hpp"
#include "hinfcalc/signals.hpp"

namespace hinfcalc::admissibility {

enum class Method { kGramian, kQuadrature };

/// Admissibility constant of an observation matrix: the operator norm of
/// x0 -> C e^{A.} x0 into causal L2, i.e. kappa^2 = lambda_max of the
/// observability Gramian.
struct Report {
  double kappa = 0.0;
  Method method = Method::kGramian;
  std::string generator_id;
  std::string observation_id;
};

/// Exact route through the Lyapunov Gramian.
Report gramian(const linops::GeneratorMatrix& a, const Matrix& c,
               const std::string& generator_id = {}, const std::string& observation_id = {});

/// Discretized route: probe maximum over canonical basis vectors plus eight
/// seeded random unit vectors, refined by 50 matrix-free power-iteration
/// steps on the midpoint-quadrature Gramian. The estimate is a lower bound
/// of the discrete constant.
Report quadrature(const linops::GeneratorMatrix& a, const Matrix& c,
                  const signals::TimeGrid& grid, const std::string& generator_id = {},
                  const std::string& observation_id = {}, std::uint64_t seed = 0x5eed);

/// Verifies the output-intertwining identity M_g(C e^{A.} x0)(t)
/// = C g(A) e^{At} x0 over probe states and window times, and reports the
/// admissibility constant of the composed observation C g(A).
struct IntertwiningReport {
  double max_deviation = 0.0;  // relative to ||C g(A)||
  double kappa_composed = 0.0;
  bool passed = false;
};

IntertwiningReport check_intertwining(const linops::GeneratorMatrix& a, const Matrix& c,
                                      const funcspec::FuncExpr& g,
                                      const signals::TimeGrid& grid);

/// kappa for C = sqrt(-A) under A, and for C = sqrt(-A*) under A*. Both are
/// finite at any fixed dimension; the pair is meant to be tracked across a
/// nested generator family.
std::pair<Report, Report> sqrt_profile(const linops::GeneratorMatrix& a);

}  // namespace hinfcalc::admissibility
