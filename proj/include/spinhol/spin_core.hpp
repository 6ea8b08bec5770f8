// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <vector>

#include "spinhol/execution.hpp"
#include "spinhol/linalg.hpp"
#include "spinhol/rotation.hpp"

namespace spinhol {

/// A spin quantum number s, stored as 2s so half-integers are exact.
///
/// Basis convention used everywhere: row/column r of an N×N spin matrix corresponds to
/// m = s − r, i.e. the S_z eigenbasis ordered m = s, s−1, …, −s.
struct SpinQuantum {
  int twice_s = 0;

  /// Throws DomainError if `twice` is negative.
  static SpinQuantum from_twice(int twice);
  static SpinQuantum whole(int s) { return from_twice(2 * s); }

  int dimension() const { return twice_s + 1; }
  double value() const { return 0.5 * twice_s; }
  double casimir() const { return value() * (value() + 1.0); }
  /// 2m for basis row r.
  int twice_m_at(int row) const { return twice_s - 2 * row; }
  double m_at(int row) const { return 0.5 * twice_m_at(row); }
  /// Basis row holding 2m; the caller guarantees |2m| ≤ 2s with matching parity.
  int row_of(int twice_m) const { return (twice_s - twice_m) / 2; }

  auto operator<=>(const SpinQuantum&) const = default;
};

/// The su(2) generators in the spin-s irrep (ħ = 1).
struct SpinOperators {
  SpinQuantum s;
  Matrix sx, sy, sz;

  Matrix raising() const { return sx + kI * sy; }
  Matrix lowering() const { return sx - kI * sy; }
  /// n·S for a real 3-vector n.
  Matrix along(const Vec3& n) const { return n.x() * sx + n.y() * sy + n.z() * sz; }
};

/// Spin operators with ladder elements ⟨m±1|S_±|m⟩ = √(s(s+1) − m(m±1)).
SpinOperators spin_operators(SpinQuantum s);

/// D^(s)(R) = exp(−i m·S) for the canonical axis-angle vector of R.
Matrix wigner_D(SpinQuantum s, const Rotation& r);

/// D^(s)(g) = exp(−i ψ n·S) for g = e^{−iψ n·σ/2}; respects the SU(2) sign.
Matrix wigner_D(SpinQuantum s, const Su2& g);

/// exp(−i m·S) for an arbitrary axis-angle vector m (any length).
Matrix wigner_D_axis_angle(SpinQuantum s, const Vec3& m);

/// ⟨j1 m1; j2 m2 | j m⟩ in the Condon–Shortley convention, with all m's given as 2m.
/// The Racah sum is evaluated in exact rational arithmetic and rounded once.
/// Throws DomainError for inconsistent quantum numbers (triangle, parity, |m| ≤ j, m1+m2 ≠ m).
double clebsch_gordan(SpinQuantum j1, SpinQuantum j2, SpinQuantum j, int twice_m1, int twice_m2,
                      int twice_m);

/// Trace-orthonormal spin-s polarization tensor T_{ℓm}:
/// ⟨s m'|T_{ℓm}|s m''⟩ = √((2ℓ+1)/(2s+1)) ⟨s m''; ℓ m | s m'⟩.
struct PolarizationTensor {
  SpinQuantum s;
  int ell = 0;
  int m = 0;
  Matrix matrix;
};

PolarizationTensor polarization_tensor(SpinQuantum s, int ell, int m);

/// D^(s) along the continuous lift of the curve (see lift_to_su2), one matrix per sample.
std::vector<Matrix> lift_along_curve(SpinQuantum s, const RotationCurve& curve,
                                     Execution exec = Execution::parallel);

}  // namespace spinhol
