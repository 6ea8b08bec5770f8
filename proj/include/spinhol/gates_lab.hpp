// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spinhol/execution.hpp"
#include "spinhol/grassmann.hpp"
#include "spinhol/holonomy.hpp"
#include "spinhol/linalg.hpp"
#include "spinhol/rotation.hpp"
#include "spinhol/spin_core.hpp"

namespace spinhol {

/// Where a stored value comes from: "published" (transcribed literally) or "computed"
/// (produced by this library from an independent oracle).
struct ReferenceCurve {
  std::string name;  // demo name: "not", "cnot1", "cnot2"
  Vec3 axis;
  double angle = 0.0;
  Matrix expected;  // expected holonomy, exact comparison
  std::string source;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  SpinQuantum s;
  std::vector<Vector> kets;  // written order; a single ket with is_state marks a state
  bool is_state = false;
  std::vector<Rotation> symmetries;
  std::vector<ReferenceCurve> curves;
  std::string source;
};

/// pi_not, pi_not_alt, pi_cnot and chi, in that order.
std::vector<CatalogEntry> catalog();

/// Throws DomainError for an unknown name.
CatalogEntry catalog_entry(std::string_view name);

/// The entry's span as a plane (kets orthonormalised in order).
KPlane entry_plane(const CatalogEntry& e);

/// 2×2 unitary B with (ψ_a, ψ_b) = (ψ_1, ψ_2)·B for the alternative basis of pi_not.
Matrix alternative_basis_change();

struct GateDemo {
  CatalogEntry entry;
  ReferenceCurve curve;
};

/// Demo names in catalog order: "not", "cnot1", "cnot2".
std::vector<std::string> gate_demo_names();

/// Throws DomainError for an unknown name.
GateDemo gate_demo(std::string_view name);

/// R(t) = rotation about the unit axis by angle·t, t ∈ [0, 1], `samples` uniform samples.
/// Throws DomainError unless |axis| = 1 within 1e-12.
RotationCurve rotation_curve(const Vec3& axis, double angle, int samples);

/// sin(πx) that is exactly zero at integers.
double sin_pi(double x);

/// Coefficients a_1 … a_n of an endpoint-fixing perturbation, each uniform in the ball of
/// radius `amplitude`. Deterministic for a given seed on every platform.
std::vector<Vec3> perturbation_modes(double amplitude, int n_modes, std::uint64_t seed);

/// R'(t) = R_{ε(t)}·R(t) with ε(t) = Σ_n a_n sin(nπt/T). ε vanishes exactly at both ends, so
/// the endpoint samples equal the base ones bit for bit. Requires a path-backed base curve
/// and amplitude ≥ 0 (DomainError otherwise).
RotationCurve perturb_curve(const RotationCurve& base, double amplitude, int n_modes, std::uint64_t seed);

struct GateOptions {
  int samples = 2001;
  /// Each doubling replaces n samples by 2(n − 1) + 1.
  int max_doublings = 4;
  /// Refinement stops once the Hermitian defect, the F-unitarity defect and the
  /// step-halving delta are all below this.
  double refine_tol = 1e-9;
  HolonomyOptions holonomy;
};

struct GateResult {
  Holonomy holonomy;
  /// The curve ends on a symmetry rotation of the plane (closed loop in the Grassmannian).
  bool closed = false;
  double endpoint_residual = 0.0;
  int doublings = 0;
};

/// Holonomy of the plane carried along the curve in its catalog basis, doubling the
/// sample count while the accuracy diagnostics exceed refine_tol.
GateResult extract_gate(const KPlane& p, const RotationCurve& curve, const GateOptions& options = {});

enum class CompareMode { exact, up_to_global_phase };

struct GateComparison {
  bool match = false;
  double distance = 0.0;
};

/// ‖u − target‖_max, or ‖u − e^{iφ}target‖_max with φ = arg tr(target†u).
/// Throws DomainError on a shape mismatch.
GateComparison compare_gate(const Matrix& u, const Matrix& target, CompareMode mode, double tol);

struct SweepConfig {
  std::vector<std::uint64_t> seeds;
  std::vector<double> amplitudes;
  int n_modes = 3;
  GateOptions gate;
};

struct SweepPoint {
  std::uint64_t seed = 0;
  double amplitude = 0.0;
  double deviation = 0.0;  // ‖U' − reference‖_max
  std::size_t samples = 0;
};

/// Holonomy deviation for every (seed, amplitude) pair, sorted by seed then amplitude.
/// Grid points are independent; `exec` chooses how they are distributed.
std::vector<SweepPoint> invariance_sweep(const KPlane& p, const RotationCurve& base, const Matrix& reference,
                                         const SweepConfig& config, Execution exec = Execution::parallel);

}  // namespace spinhol
