// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinhol/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace spinhol {

Matrix expm_i_hermitian(const Matrix& h) {
  const auto n = h.rows();
  if (max_abs(h) == 0.0) return Matrix::Identity(n, n);
  // Symmetrise first so the solver sees an exactly Hermitian input.
  const Matrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  Vector phases(n);
  for (Eigen::Index i = 0; i < n; ++i) phases(i) = std::polar(1.0, -lambda(i));
  const Matrix& v = eig.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

Matrix expm_anti_hermitian(const Matrix& a) {
  // a = −i h with h = i a Hermitian.
  return expm_i_hermitian(kI * a);
}

double unitarity_defect(const Matrix& m) {
  return max_abs(m.adjoint() * m - Matrix::Identity(m.cols(), m.cols()));
}

}  // namespace spinhol
