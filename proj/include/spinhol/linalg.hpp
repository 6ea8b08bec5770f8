// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace spinhol {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr Complex kI{0.0, 1.0};

/// Largest entrywise modulus, the norm every tolerance in this library is stated in.
inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// exp(a) for anti-Hermitian a, via the spectrum of the Hermitian matrix i·a.
/// The result is unitary to machine precision.
Matrix expm_anti_hermitian(const Matrix& a);

/// exp(-i h) for Hermitian h.
Matrix expm_i_hermitian(const Matrix& h);

/// ‖m†m − I‖_max.
double unitarity_defect(const Matrix& m);

}  // namespace spinhol
