// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinhol/gates_lab.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "spinhol/errors.hpp"

namespace spinhol {

namespace {

using std::numbers::pi;

Vector ket(std::initializer_list<Complex> entries) {
  Vector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Complex& x : entries) v(i++) = x;
  return v;
}

/// Spin-s ket from (m, amplitude) pairs.
Vector spin_ket(SpinQuantum s, std::initializer_list<std::pair<int, Complex>> terms) {
  Vector v = Vector::Zero(s.dimension());
  for (const auto& [m, a] : terms) v(s.row_of(2 * m)) = a;
  return v;
}

Matrix sigma_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

Matrix gate_u1() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = -1.0;
  return m;
}

Matrix gate_u2() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1.0;
  m(2, 2) = std::polar(1.0, 4.0 * pi / 5.0);
  m(3, 3) = std::polar(1.0, -4.0 * pi / 5.0);
  return m;
}

CatalogEntry pi_not() {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  CatalogEntry e;
  e.name = "pi_not";
  e.description = "spin-2 2-plane realising a NOT gate";
  e.s = SpinQuantum::whole(2);
  e.kets = {ket({1.0, 0.0, 0.0, r2, 0.0}) / r3, ket({0.0, -r2, 0.0, 0.0, 1.0}) / r3};
  e.symmetries = {Rotation::about(Vec3::UnitY(), pi)};
  e.curves = {ReferenceCurve{"not", Vec3::UnitY(), pi, sigma_x(), "published"}};
  e.source = "published";
  return e;
}

CatalogEntry pi_not_alt() {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
  CatalogEntry e;
  e.name = "pi_not_alt";
  e.description = "the NOT plane in the rotated basis (psi_a, psi_b)";
  e.s = SpinQuantum::whole(2);
  e.kets = {ket({1.0 / r2, -r3, 0.0, 1.0, r6 / 2.0}) / r6, ket({r6 / 2.0, 1.0, 0.0, r3, -1.0 / r2}) / r6};
  e.symmetries = {Rotation::about(Vec3::UnitY(), pi)};
  const Matrix b = alternative_basis_change();
  e.curves = {ReferenceCurve{"not_alt", Vec3::UnitY(), pi, b.adjoint() * sigma_x() * b, "computed"}};
  e.source = "published";
  return e;
}

CatalogEntry pi_cnot() {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
  const SpinQuantum s = SpinQuantum::whole(5);
  CatalogEntry e;
  e.name = "pi_cnot";
  e.description = "spin-5 4-plane realising a CNOT gate";
  e.s = s;
  e.kets = {
      spin_ket(s, {{5, 1.0}, {0, kI * r2}, {-5, 1.0}}) / 2.0,
      spin_ket(s, {{5, 1.0}, {0, -kI * r2}, {-5, 1.0}}) / 2.0,
      spin_ket(s, {{3, r2}, {-2, kI * r3}}) / r5,
      spin_ket(s, {{2, kI * r3}, {-3, r2}}) / r5,
  };
  e.symmetries = {Rotation::about(Vec3::UnitX(), pi), Rotation::about(Vec3::UnitZ(), 2.0 * pi / 5.0)};
  e.curves = {ReferenceCurve{"cnot1", Vec3::UnitX(), pi, gate_u1(), "published"},
              ReferenceCurve{"cnot2", Vec3::UnitZ(), 2.0 * pi / 5.0, gate_u2(), "published"}};
  e.source = "published";
  return e;
}

CatalogEntry chi() {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
  CatalogEntry e;
  e.name = "chi";
  e.description = "spin-2 state whose constellation is a regular tetrahedron";
  e.s = SpinQuantum::whole(2);
  e.kets = {ket({(r3 - 2.0 * r6) / 12.0, (r3 + r6) / 6.0, 1.0 / (2.0 * r2), (r3 - r6) / 6.0,
                 (4.0 + r2) / (4.0 * r6)})};
  e.is_state = true;
  e.symmetries = {Rotation::about(Vec3::UnitX(), 2.0 * pi / 3.0)};
  e.source = "published";
  return e;
}

/// Uniform double in [0, 1) from the top 53 bits, independent of the standard library's
/// distribution implementations.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::vector<CatalogEntry> catalog() { return {pi_not(), pi_not_alt(), pi_cnot(), chi()}; }

CatalogEntry catalog_entry(std::string_view name) {
  for (CatalogEntry& e : catalog()) {
    if (e.name == name) return e;
  }
  throw DomainError("unknown catalog entry '" + std::string(name) + "'");
}

KPlane entry_plane(const CatalogEntry& e) { return plane_from_kets(e.s, e.kets); }

Matrix alternative_basis_change() {
  Matrix b(2, 2);
  b << std::cos(pi / 3.0), std::cos(pi / 6.0), std::sin(pi / 3.0), -std::sin(pi / 6.0);
  return b;
}

std::vector<std::string> gate_demo_names() { return {"not", "cnot1", "cnot2"}; }

GateDemo gate_demo(std::string_view name) {
  for (const CatalogEntry& e : catalog()) {
    for (const ReferenceCurve& c : e.curves) {
      if (c.name == name) return GateDemo{e, c};
    }
  }
  throw DomainError("unknown gate demo '" + std::string(name) + "'");
}

RotationCurve rotation_curve(const Vec3& axis, double angle, int samples) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) throw DomainError("rotation axis must be a unit vector");
  const Vec3 m = axis * angle;
  return RotationCurve([m](double t) { return Su2::exp_axis_angle(m * t); }, 1.0, samples);
}

double sin_pi(double x) {
  const double r = std::fmod(x, 2.0);
  if (r == std::floor(r)) return 0.0;
  return std::sin(pi * r);
}

std::vector<Vec3> perturbation_modes(double amplitude, int n_modes, std::uint64_t seed) {
  if (!(amplitude >= 0.0)) throw DomainError("perturbation amplitude must be non-negative");
  if (n_modes < 0) throw DomainError("number of perturbation modes must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<Vec3> modes;
  while (static_cast<int>(modes.size()) < n_modes) {
    const Vec3 v(2.0 * unit_uniform(rng) - 1.0, 2.0 * unit_uniform(rng) - 1.0, 2.0 * unit_uniform(rng) - 1.0);
    if (v.squaredNorm() <= 1.0) modes.push_back(amplitude * v);
  }
  return modes;
}

RotationCurve perturb_curve(const RotationCurve& base, double amplitude, int n_modes, std::uint64_t seed) {
  if (!base.resamplable()) throw DomainError("perturbations need a path-backed base curve");
  const std::vector<Vec3> modes = perturbation_modes(amplitude, n_modes, seed);
  const double t0 = base.times().front();
  const double duration = base.duration();
  const RotationCurve::Path inner = base.path();
  RotationCurve::Path path = [modes, inner, t0, duration](double t) {
    Vec3 eps = Vec3::Zero();
    const double x = (t - t0) / duration;
    for (std::size_t n = 0; n < modes.size(); ++n) eps += modes[n] * sin_pi(static_cast<double>(n + 1) * x);
    return Su2::exp_axis_angle(eps) * inner(t);
  };
  return RotationCurve(std::move(path), duration, static_cast<int>(base.size()));
}

GateResult extract_gate(const KPlane& p, const RotationCurve& curve, const GateOptions& options) {
  GateResult result;
  const SymmetryCheck closure = is_symmetry_rotation(p, curve.back());
  result.closed = closure.symmetric;
  result.endpoint_residual = closure.residual;

  const bool resample = curve.resamplable() && options.samples > 0;
  int samples = resample ? options.samples : static_cast<int>(curve.size());
  while (true) {
    const FrameCurve fc = frame_curve_from_rotations(p, curve, resample ? samples : 0, options.holonomy.exec);
    result.holonomy = wz_holonomy(fc, options.holonomy);
    const Holonomy& h = result.holonomy;
    const bool converged = h.max_hermitian_defect <= options.refine_tol &&
                           h.f_unitarity_defect <= options.refine_tol && h.step_halving_delta <= options.refine_tol;
    if (converged || !resample || result.doublings >= options.max_doublings) break;
    samples = 2 * (samples - 1) + 1;
    ++result.doublings;
  }
  return result;
}

GateComparison compare_gate(const Matrix& u, const Matrix& target, CompareMode mode, double tol) {
  if (u.rows() != target.rows() || u.cols() != target.cols()) throw DomainError("gate shapes differ");
  Complex phase = 1.0;
  if (mode == CompareMode::up_to_global_phase) {
    const Complex overlap = (target.adjoint() * u).trace();
    if (std::abs(overlap) > 0.0) phase = overlap / std::abs(overlap);
  }
  const double distance = max_abs(u - phase * target);
  return GateComparison{distance < tol, distance};
}

}  // namespace spinhol
