// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinhol/spin_core.hpp"

#include <cmath>
#include <string>

#include "spinhol/errors.hpp"

namespace spinhol {

SpinQuantum SpinQuantum::from_twice(int twice) {
  if (twice < 0) throw DomainError("spin must be non-negative, got 2s = " + std::to_string(twice));
  return SpinQuantum{twice};
}

SpinOperators spin_operators(SpinQuantum s) {
  const int n = s.dimension();
  const double c = s.casimir();
  Matrix sz = Matrix::Zero(n, n);
  Matrix sp = Matrix::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    const double m = s.m_at(r);
    sz(r, r) = m;
    // S_+ maps column r (m) to row r−1 (m+1).
    if (r > 0) sp(r - 1, r) = std::sqrt(c - m * (m + 1.0));
  }
  const Matrix sm = sp.adjoint();
  SpinOperators ops{s, 0.5 * (sp + sm), -0.5 * kI * (sp - sm), sz};
  return ops;
}

Matrix wigner_D_axis_angle(SpinQuantum s, const Vec3& m) {
  if (m.squaredNorm() == 0.0) return Matrix::Identity(s.dimension(), s.dimension());
  return expm_i_hermitian(spin_operators(s).along(m));
}

Matrix wigner_D(SpinQuantum s, const Rotation& r) { return wigner_D_axis_angle(s, r.axis_angle()); }

Matrix wigner_D(SpinQuantum s, const Su2& g) { return wigner_D_axis_angle(s, g.log_axis_angle()); }

PolarizationTensor polarization_tensor(SpinQuantum s, int ell, int m) {
  if (ell < 0 || ell > s.twice_s) {
    throw DomainError("polarization tensor rank must satisfy 0 <= l <= 2s");
  }
  if (std::abs(m) > ell) throw DomainError("polarization tensor needs |m| <= l");
  const int n = s.dimension();
  const SpinQuantum rank = SpinQuantum::whole(ell);
  const double norm = std::sqrt((2.0 * ell + 1.0) / n);
  Matrix t = Matrix::Zero(n, n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const int twice_m_out = s.twice_m_at(row);
      const int twice_m_in = s.twice_m_at(col);
      if (twice_m_in + 2 * m != twice_m_out) continue;
      t(row, col) = norm * clebsch_gordan(s, rank, s, twice_m_in, 2 * m, twice_m_out);
    }
  }
  return PolarizationTensor{s, ell, m, std::move(t)};
}

std::vector<Matrix> lift_along_curve(SpinQuantum s, const RotationCurve& curve, Execution exec) {
  const std::vector<Su2> lift = lift_to_su2(curve);
  std::vector<Matrix> out(lift.size());
  for_each_index(lift.size(), exec, [&](std::size_t i) { out[i] = wigner_D(s, lift[i]); });
  return out;
}

}  // namespace spinhol
