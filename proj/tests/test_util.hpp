#pragma once

#include <cstdint>
#include <random>

#include "hinfcalc/linops.hpp"
#include "hinfcalc/types.hpp"

namespace test_util {

using hinfcalc::Complex;
using hinfcalc::Matrix;
using hinfcalc::Vector;

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Complex random_complex(std::mt19937_64& rng) {
  return Complex(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_complex(rng);
  return m;
}

/// Random exponentially stable generator: shifted random matrix.
inline hinfcalc::linops::GeneratorMatrix random_generator(std::mt19937_64& rng, int n) {
  Matrix g = random_matrix(rng, n, n) / std::sqrt(static_cast<double>(n));
  const double abscissa = hinfcalc::linops::spectral_abscissa(g);
  g -= (abscissa + 1.0) * Matrix::Identity(n, n);
  return hinfcalc::linops::GeneratorMatrix(std::move(g));
}

inline double rel_error(const Matrix& got, const Matrix& want) {
  return hinfcalc::linops::operator_norm(got - want) /
         std::max(hinfcalc::linops::operator_norm(want), 1e-300);
}

}  // namespace test_util
