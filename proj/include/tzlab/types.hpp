#pragma once

#include <Eigen/Dense>
#include <complex>

namespace tzlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Coordinates of a vector in the Fourier basis e_0..e_{N-1} of the
/// truncated Hardy space.
using HardyVector = CVector;

}  // namespace tzlab
