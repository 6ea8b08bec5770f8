// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "spinhol/linalg.hpp"
#include "spinhol/rotation.hpp"
#include "spinhol/spin_core.hpp"

namespace spinhol {

inline constexpr double kAnticoherenceTol = 1e-9;
inline constexpr double kPlaneTol = 1e-8;
inline constexpr double kRankTol = 1e-10;

/// A point of Gr(k, N) for a spin-s system, stored as an orthonormal N×k frame.
/// Frames are only meaningful up to right multiplication by a k×k unitary.
class KPlane {
 public:
  /// Throws DomainError unless frame is N×k with 1 ≤ k ≤ N and frame†frame = I within 1e-12.
  KPlane(SpinQuantum s, Matrix frame);

  SpinQuantum spin() const { return s_; }
  int k() const { return static_cast<int>(frame_.cols()); }
  int dimension() const { return static_cast<int>(frame_.rows()); }
  const Matrix& frame() const { return frame_; }

 private:
  SpinQuantum s_;
  Matrix frame_;
};

/// Orthonormalises kets in order (Gram–Schmidt), so column i spans the same flag as kets[0..i].
/// Already-orthonormal input is returned unchanged. Throws DegenerateInputError when the
/// smallest singular value of the ket matrix is below kRankTol, DomainError on a length mismatch.
KPlane plane_from_kets(SpinQuantum s, std::span<const Vector> kets);

/// Largest principal angle between two planes, in [0, π/2].
double plane_distance(const KPlane& a, const KPlane& b);

/// Frame D^(s)(R)·frame.
KPlane rotate_plane(const KPlane& p, const Rotation& r);
/// Frame u·frame for an N×N unitary u (e.g. a lifted rotation).
KPlane rotate_plane(const KPlane& p, const Matrix& u);

/// k×k block ⟨ψ_i|A|ψ_j⟩ of an operator on the plane's frame.
Matrix compress(const KPlane& p, const Matrix& op);

struct AnticoherenceReport {
  /// Largest t with residual(ℓ) < tol for every 1 ≤ ℓ ≤ t; 0 if not 1-anticoherent.
  int order = 0;
  /// residuals[ℓ − 1] = max over m of the spectral norm of the block ⟨ψ_i|T_{ℓm}|ψ_j⟩. It bounds
  /// every element of the block and does not depend on the basis chosen inside the plane.
  std::vector<double> residuals;
  double tol = kAnticoherenceTol;
};

/// Tests ⟨ψ_i|T_{ℓm}|ψ_j⟩ = 0 for 1 ≤ ℓ ≤ t_max. Requires t_max ≤ 2s.
AnticoherenceReport anticoherence(const KPlane& p, int t_max, double tol = kAnticoherenceTol);

/// max over a ∈ {x,y,z}, i, j of |⟨ψ_i|S_a|ψ_j⟩|.
double spin_expectation_residual(const KPlane& p);

struct SymmetryCheck {
  bool symmetric = false;
  double residual = 0.0;  // plane_distance(p, R(p))
};

SymmetryCheck is_symmetry_rotation(const KPlane& p, const Rotation& r, double tol = kPlaneTol);

}  // namespace spinhol
