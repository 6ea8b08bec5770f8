// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "spinhol/execution.hpp"
#include "spinhol/grassmann.hpp"
#include "spinhol/linalg.hpp"
#include "spinhol/rotation.hpp"

namespace spinhol {

inline constexpr double kDegenerateOverlapTol = 1e-10;

/// Samples (t_i, Φ_i) of a curve of k-planes, each Φ_i an orthonormal N×k frame.
class FrameCurve {
 public:
  /// Throws DomainError for fewer than 2 samples, non-increasing times, shape mismatch,
  /// or a frame whose columns are not orthonormal within 1e-12.
  FrameCurve(SpinQuantum s, std::vector<double> times, std::vector<Matrix> frames);

  SpinQuantum spin() const { return s_; }
  int k() const { return static_cast<int>(frames_.front().cols()); }
  std::size_t size() const { return times_.size(); }
  const std::vector<double>& times() const { return times_; }
  const std::vector<Matrix>& frames() const { return frames_; }
  const Matrix& frame(std::size_t i) const { return frames_[i]; }

  /// max_i ‖Φ_{i+1} − Φ_i‖_max, a continuity diagnostic.
  double max_step() const;
  /// Every `stride`-th sample, always keeping the last one when it falls on the stride.
  FrameCurve subsampled(std::size_t stride) const;

 private:
  SpinQuantum s_;
  std::vector<double> times_;
  std::vector<Matrix> frames_;
};

/// Frames Φ(t_i) = D^(s)(R̃(t_i))·p.frame along the continuous lift of the curve.
/// `samples` > 0 resamples the curve first (requires a path-backed curve).
FrameCurve frame_curve_from_rotations(const KPlane& p, const RotationCurve& curve, int samples = 0,
                                      Execution exec = Execution::parallel);

/// Number of samples in the finite-difference window used for Φ̇.
inline constexpr std::size_t kConnectionStencil = 7;

struct ConnectionSample {
  Matrix a;                       // anti-Hermitian part of Φ†Φ̇
  double hermitian_defect = 0.0;  // ‖(Φ†Φ̇ + (Φ†Φ̇)†)/2‖_max, discarded by the projection
};

/// WZ connection A_ij = ⟨φ_i|φ̇_j⟩ at sample i. Φ̇ comes from a 7-point finite-difference
/// stencil on the (possibly non-uniform) sample times, centred where possible and one-sided
/// at the ends; the result is projected onto anti-Hermitian matrices.
ConnectionSample wz_connection(const FrameCurve& fc, std::size_t i);

/// wz_connection at every sample.
std::vector<ConnectionSample> wz_connections(const FrameCurve& fc, Execution exec = Execution::parallel);

enum class OrderingScheme {
  /// exp((M − M†)/2) per step with M = Φ_i†Φ_{i+1}: second order, uses only adjacent frames.
  midpoint,
  /// Stencil connections, 4-node quadrature per step plus the commutator correction of the
  /// fourth-order Magnus expansion.
  high_order,
};

/// F = Pexp(∫A dt) = E_0·E_1·…·E_{n−2}, later steps multiplying on the right, where
/// E_i is the exponential of the step generator. Unitary by construction.
Matrix path_ordered_exponential(const FrameCurve& fc, OrderingScheme scheme = OrderingScheme::high_order,
                                Execution exec = Execution::parallel);

/// Q = Φ(0)†Φ(T).
Matrix overlap_matrix(const FrameCurve& fc);

/// Unitary polar factor W·V† of q = W·D·V†. Throws DegenerateOverlapError when the smallest
/// singular value is below tol.
Matrix polar_part(const Matrix& q, double tol = kDegenerateOverlapTol);

struct Holonomy {
  Matrix u;  // P·F⁻¹
  Matrix q;
  Matrix p;
  Matrix f;
  double max_connection_norm = 0.0;
  double max_hermitian_defect = 0.0;
  double min_overlap_singular_value = 0.0;
  double f_unitarity_defect = 0.0;
  /// ‖U − U_half‖_max against the same curve at every other sample; −1 when the curve is
  /// too short to halve.
  double step_halving_delta = -1.0;
  std::size_t samples = 0;
};

struct HolonomyOptions {
  OrderingScheme scheme = OrderingScheme::high_order;
  Execution exec = Execution::parallel;
  bool estimate_error = true;
};

/// U_geo = P·F⁻¹ with diagnostics. Valid for open and closed curves.
Holonomy wz_holonomy(const FrameCurve& fc, const HolonomyOptions& options = {});

/// arg⟨ψ(0)|ψ(T)⟩ + i∫⟨ψ|ψ̇⟩dt for k = 1, wrapped into (−π, π].
double abelian_geometric_phase(const FrameCurve& fc);

/// Independent holonomy: transport the initial frame step by step, projecting onto each new
/// plane and re-orthonormalising by polar decomposition; returns polar(Φ(0)†Ψ(T)).
/// Throws RefinementRequiredError when a projection loses rank.
Matrix parallel_transport_oracle(const FrameCurve& fc);

}  // namespace spinhol
