#pragma once

#include <complex>

#include <Eigen/Dense>

namespace hinfcalc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

constexpr Complex kImagUnit{0.0, 1.0};

}  // namespace hinfcalc
