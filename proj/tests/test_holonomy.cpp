// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "spinhol/errors.hpp"
#include "spinhol/gates_lab.hpp"
#include "spinhol/holonomy.hpp"
#include "support.hpp"

using namespace spinhol;
using spinhol::test::Gen;
using spinhol::test::pi;

namespace {

Matrix holonomy_of(const FrameCurve& fc) { return wz_holonomy(fc).u; }

/// Frames Φ(τ(t_i)) for a smooth curve evaluated at warped times.
FrameCurve warped_curve(SpinQuantum s, const Matrix& h1, const Matrix& h2, const Matrix& frame0, std::size_t n,
                        double (*warp)(double)) {
  const std::vector<double> t = spinhol::test::uniform_times(n);
  std::vector<Matrix> frames;
  for (double ti : t) {
    const double tau = warp(ti);
    frames.push_back(expm_i_hermitian(h1 * tau + h2 * (tau * tau)) * frame0);
  }
  return FrameCurve(s, t, std::move(frames));
}

double warp(double t) { return t + 0.3 * std::sin(pi * t) / pi; }

/// Spin-1/2 coherent state walking the octant loop north pole → +x → +y → north pole.
/// Each leg is reparametrised by u − sin(2πu)/(2π) so the velocity vanishes at the corners.
FrameCurve octant_loop(std::size_t per_leg) {
  std::vector<double> times;
  std::vector<Matrix> frames;
  auto push = [&](double t, double theta, double phi) {
    Matrix f(2, 1);
    f(0, 0) = std::cos(theta / 2);
    f(1, 0) = std::polar(std::sin(theta / 2), phi);
    times.push_back(t);
    frames.push_back(f);
  };
  for (int leg = 0; leg < 3; ++leg) {
    for (std::size_t i = (leg == 0 ? 0 : 1); i < per_leg; ++i) {
      const double u = static_cast<double>(i) / static_cast<double>(per_leg - 1);
      const double v = u - std::sin(2 * pi * u) / (2 * pi);
      const double t = leg + u;
      if (leg == 0) push(t, v * pi / 2, 0.0);
      if (leg == 1) push(t, pi / 2, v * pi / 2);
      if (leg == 2) push(t, (1.0 - v) * pi / 2, pi / 2);
    }
  }
  return FrameCurve(SpinQuantum::from_twice(1), times, frames);
}

}  // namespace

TEST_CASE("FrameCurve rejects malformed input") {
  const SpinQuantum s = SpinQuantum::from_twice(1);
  Matrix up = Matrix::Zero(2, 1);
  up(0, 0) = 1.0;
  CHECK_THROWS_AS(FrameCurve(s, {0.0}, {up}), DomainError);
  CHECK_THROWS_AS(FrameCurve(s, {0.0, 0.0}, {up, up}), DomainError);
  CHECK_THROWS_AS(FrameCurve(s, {0.0, 1.0}, {up, 2.0 * up}), DomainError);
  CHECK_THROWS_AS(FrameCurve(s, {0.0, 1.0}, {up, Matrix::Identity(2, 2)}), DomainError);
}

TEST_CASE("polar_part and overlap_matrix examples") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = Complex(0.0, 3.0);
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  expected(1, 1) = kI;
  CHECK(max_abs(polar_part(d) - expected) < 1e-15);

  Gen g(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix u = g.unitary(3);
    CHECK(max_abs(polar_part(u) - u) < 1e-13);
    const Matrix m = g.gaussian(3, 3);
    const Matrix p = polar_part(m);
    CHECK(unitarity_defect(p) < 1e-13);
    // m = P·H with H Hermitian positive.
    const Matrix h = p.adjoint() * m;
    CHECK(max_abs(h - h.adjoint()) < 1e-12);
  }
  CHECK_THROWS_AS(polar_part(Matrix::Zero(2, 2)), DegenerateOverlapError);

  const SpinQuantum s = SpinQuantum::whole(1);
  const Matrix f0 = g.frame(3, 2), f1 = g.frame(3, 2);
  const FrameCurve fc(s, {0.0, 1.0}, {f0, f1});
  CHECK(max_abs(overlap_matrix(fc) - f0.adjoint() * f1) < 1e-15);
}

TEST_CASE("constant curve: zero connection, identity holonomy") {
  Gen g(42);
  const SpinQuantum s = SpinQuantum::whole(2);
  const Matrix f = g.frame(5, 2);
  const FrameCurve fc(s, spinhol::test::uniform_times(50), std::vector<Matrix>(50, f));
  const Holonomy h = wz_holonomy(fc);
  CHECK(max_abs(h.u - Matrix::Identity(2, 2)) < 1e-14);
  CHECK(h.max_connection_norm < 1e-12);  // stencil weights sum to zero up to rounding
  CHECK(h.step_halving_delta < 1e-15);
}

TEST_CASE("constant connection: closed form Pexp") {
  // Φ(t) = exp(−iHt)Φ0 with [H, Φ0Φ0†] = 0 keeps the plane fixed and A = −iΦ0†HΦ0 constant.
  Gen g(43);
  const SpinQuantum s = SpinQuantum::whole(2);
  const Matrix v = g.unitary(5);
  Matrix lambda = Matrix::Zero(5, 5);
  for (int i = 0; i < 5; ++i) lambda(i, i) = g.uniform(-2, 2);
  const Matrix h = v * lambda * v.adjoint();
  const Matrix f0 = v.leftCols(2);
  const FrameCurve fc = spinhol::test::smooth_curve(s, h, Matrix::Zero(5, 5), f0, 201);
  const Matrix a = -kI * f0.adjoint() * h * f0;
  const Matrix f = path_ordered_exponential(fc);
  CHECK(max_abs(f - expm_anti_hermitian(a)) < 1e-10);
  const Holonomy hol = wz_holonomy(fc);
  // The plane never moves, so parallel transport is trivial.
  CHECK(max_abs(hol.u - Matrix::Identity(2, 2)) < 1e-10);
  CHECK(max_abs(wz_connection(fc, 100).a - a) < 1e-10);
}

TEST_CASE("gate curves: connection vanishes at O(dt^2) and F = I") {
  for (const std::string& name : gate_demo_names()) {
    CAPTURE(name);
    const GateDemo demo = gate_demo(name);
    const KPlane p = entry_plane(demo.entry);
    double previous = -1.0;
    for (int samples : {41, 81, 161}) {
      const FrameCurve fc = frame_curve_from_rotations(p, rotation_curve(demo.curve.axis, demo.curve.angle, samples));
      const Holonomy h = wz_holonomy(fc);
      if (previous > 1e-11) CHECK(h.max_connection_norm < previous / 3.5);
      previous = h.max_connection_norm;
    }
    const FrameCurve fine = frame_curve_from_rotations(p, rotation_curve(demo.curve.axis, demo.curve.angle, 2001));
    const Holonomy h = wz_holonomy(fine);
    CHECK(h.max_connection_norm < 1e-9);
    CHECK(max_abs(h.f - Matrix::Identity(p.k(), p.k())) < 1e-9);
    CHECK(max_abs(h.u - demo.curve.expected) < 1e-8);
  }
}

TEST_CASE("oracle equivalence on catalog curves and random Gr(2,5) curves") {
  for (const std::string& name : gate_demo_names()) {
    CAPTURE(name);
    const GateDemo demo = gate_demo(name);
    const FrameCurve fc =
        frame_curve_from_rotations(entry_plane(demo.entry), rotation_curve(demo.curve.axis, demo.curve.angle, 10001));
    CHECK(max_abs(holonomy_of(fc) - parallel_transport_oracle(fc)) < 1e-5);
  }
  Gen g(44);
  const SpinQuantum s = SpinQuantum::whole(2);
  for (int trial = 0; trial < 10; ++trial) {
    const FrameCurve fc = spinhol::test::smooth_curve(s, g.hermitian(5), g.hermitian(5), g.frame(5, 2), 10001);
    const Holonomy h = wz_holonomy(fc);
    CHECK(h.max_connection_norm > 0.1);
    CHECK(max_abs(h.u - parallel_transport_oracle(fc)) < 1e-5);
  }
}

TEST_CASE("oracle converges at second order") {
  Gen g(45);
  const SpinQuantum s = SpinQuantum::whole(2);
  const Matrix h1 = g.hermitian(5), h2 = g.hermitian(5), f0 = g.frame(5, 2);
  const Matrix exact = holonomy_of(spinhol::test::smooth_curve(s, h1, h2, f0, 4001));
  const double e1 = max_abs(parallel_transport_oracle(spinhol::test::smooth_curve(s, h1, h2, f0, 201)) - exact);
  const double e2 = max_abs(parallel_transport_oracle(spinhol::test::smooth_curve(s, h1, h2, f0, 401)) - exact);
  CHECK(e1 / e2 > 3.5);
  CHECK(e1 / e2 < 4.5);
}

TEST_CASE("gauge covariance: U' = B0† U B0 for a closed gauge loop") {
  Gen g(46);
  const SpinQuantum s = SpinQuantum::whole(2);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix h1 = g.hermitian(5), h2 = g.hermitian(5), f0 = g.frame(5, 2);
    const Matrix k = g.hermitian(2), b0 = g.unitary(2);
    const std::vector<double> t = spinhol::test::uniform_times(2001);
    const FrameCurve base = spinhol::test::smooth_curve(s, h1, h2, f0, t);
    std::vector<Matrix> gauged;
    for (std::size_t i = 0; i < t.size(); ++i) {
      gauged.push_back(base.frame(i) * expm_i_hermitian(-t[i] * (1.0 - t[i]) * k) * b0);
    }
    const Matrix u = holonomy_of(base);
    const Matrix u_gauged = holonomy_of(FrameCurve(s, t, gauged));
    CHECK(max_abs(u_gauged - b0.adjoint() * u * b0) < 1e-8);
  }
}

TEST_CASE("reparametrisation invariance") {
  Gen g(47);
  const SpinQuantum s = SpinQuantum::whole(2);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix h1 = g.hermitian(5), h2 = g.hermitian(5), f0 = g.frame(5, 2);
    const Matrix u = holonomy_of(spinhol::test::smooth_curve(s, h1, h2, f0, 2001));
    const Matrix u_warped = holonomy_of(warped_curve(s, h1, h2, f0, 2001, warp));
    CHECK(max_abs(u - u_warped) < 1e-8);
  }
}

TEST_CASE("high-order scheme converges faster than the midpoint scheme") {
  Gen g(48);
  const SpinQuantum s = SpinQuantum::whole(2);
  const Matrix h1 = g.hermitian(5), h2 = g.hermitian(5), f0 = g.frame(5, 2);
  const Matrix exact = holonomy_of(spinhol::test::smooth_curve(s, h1, h2, f0, 8001));
  auto error = [&](int n, OrderingScheme scheme) {
    const FrameCurve fc = spinhol::test::smooth_curve(s, h1, h2, f0, static_cast<std::size_t>(n));
    return max_abs(polar_part(overlap_matrix(fc)) * path_ordered_exponential(fc, scheme).adjoint() - exact);
  };
  const double mid_ratio = error(101, OrderingScheme::midpoint) / error(201, OrderingScheme::midpoint);
  const double high_ratio = error(101, OrderingScheme::high_order) / error(201, OrderingScheme::high_order);
  CHECK(mid_ratio > 3.5);
  CHECK(mid_ratio < 4.5);
  CHECK(high_ratio > 12.0);
  CHECK(error(201, OrderingScheme::high_order) < error(201, OrderingScheme::midpoint) / 100);
}

TEST_CASE("abelian reduction: k = 1 holonomy is the geometric phase") {
  Gen g(49);
  const SpinQuantum s = SpinQuantum::whole(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix h1 = g.hermitian(5), h2 = g.hermitian(5), f0 = g.frame(5, 1);
    const FrameCurve fc = spinhol::test::smooth_curve(s, h1, h2, f0, 2001);
    const double gamma = abelian_geometric_phase(fc);
    CHECK(std::abs(std::remainder(std::arg(holonomy_of(fc)(0, 0)) - gamma, 2 * pi)) < 1e-9);

    // Bargmann invariant on a finer sampling: γ = arg⟨ψ0|ψT⟩ − Σ arg⟨ψi|ψi+1⟩, second order.
    const FrameCurve fine = spinhol::test::smooth_curve(s, h1, h2, f0, 8001);
    double bargmann = std::arg(overlap_matrix(fine)(0, 0));
    for (std::size_t i = 0; i + 1 < fine.size(); ++i) {
      bargmann -= std::arg(fine.frame(i).col(0).dot(fine.frame(i + 1).col(0)));
    }
    CHECK(std::abs(std::remainder(bargmann - gamma, 2 * pi)) < 1e-6);

    // With a constant Hamiltonian the dynamical phase is ⟨H⟩T, giving γ in closed form.
    const FrameCurve stat = spinhol::test::smooth_curve(s, h1, Matrix::Zero(5, 5), f0, 2001);
    const double closed_form = std::arg(overlap_matrix(stat)(0, 0)) + (f0.adjoint() * h1 * f0)(0, 0).real();
    CHECK(std::abs(std::remainder(abelian_geometric_phase(stat) - closed_form, 2 * pi)) < 1e-9);
  }
  CHECK_THROWS_AS(abelian_geometric_phase(spinhol::test::smooth_curve(s, g.hermitian(5), g.hermitian(5), g.frame(5, 2), 11)),
                  DomainError);
}

TEST_CASE("octant loop: spin-1/2 phase is minus a quarter of pi") {
  const FrameCurve fc = octant_loop(2001);
  const double gamma = abelian_geometric_phase(fc);
  CHECK(gamma == doctest::Approx(-pi / 4).epsilon(1e-6));
  CHECK(std::abs(std::arg(holonomy_of(fc)(0, 0)) + pi / 4) < 1e-6);
}

TEST_CASE("orthogonal endpoints raise DegenerateOverlapError") {
  // |↑⟩ rotated by π about y ends on |↓⟩.
  Matrix up = Matrix::Zero(2, 1);
  up(0, 0) = 1.0;
  const KPlane p(SpinQuantum::from_twice(1), up);
  const FrameCurve fc = frame_curve_from_rotations(p, rotation_curve(Vec3::UnitY(), pi, 101));
  CHECK_THROWS_AS(wz_holonomy(fc), DegenerateOverlapError);
  CHECK_THROWS_AS(abelian_geometric_phase(fc), DegenerateOverlapError);
}

TEST_CASE("step-halving delta tracks the discretisation error") {
  Gen g(50);
  const SpinQuantum s = SpinQuantum::whole(2);
  const Matrix h1 = g.hermitian(5), h2 = g.hermitian(5), f0 = g.frame(5, 2);
  const Holonomy coarse = wz_holonomy(spinhol::test::smooth_curve(s, h1, h2, f0, 101));
  const Holonomy fine = wz_holonomy(spinhol::test::smooth_curve(s, h1, h2, f0, 401));
  CHECK(coarse.step_halving_delta > fine.step_halving_delta);
  CHECK(fine.step_halving_delta >= 0.0);
  CHECK(wz_holonomy(spinhol::test::smooth_curve(s, h1, h2, f0, 4)).step_halving_delta < 0.0);
}
