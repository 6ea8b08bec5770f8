// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include <Eigen/SVD>

#include "spinhol/errors.hpp"
#include "spinhol/holonomy.hpp"

namespace spinhol {

Matrix parallel_transport_oracle(const FrameCurve& fc) {
  Matrix transported = fc.frame(0);
  for (std::size_t i = 1; i < fc.size(); ++i) {
    const Matrix projected = fc.frame(i).adjoint() * transported;
    const double smallest = Eigen::JacobiSVD<Matrix>(projected).singularValues().minCoeff();
    if (smallest < 1e-8) {
      throw RefinementRequiredError("transport step " + std::to_string(i) + " projects onto a lower-rank subspace");
    }
    transported = fc.frame(i) * polar_part(projected);
  }
  return polar_part(fc.frame(0).adjoint() * transported);
}

}  // namespace spinhol
