// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "spinhol/errors.hpp"
#include "spinhol/rotation.hpp"
#include "support.hpp"

using namespace spinhol;
using spinhol::test::Gen;
using spinhol::test::pi;

TEST_CASE("rotation: canonical axis-angle") {
  const Rotation r = Rotation::from_axis_angle(Vec3(0, 0, 3 * pi / 2));
  CHECK(r.angle() == doctest::Approx(pi / 2).epsilon(1e-14));
  CHECK(r.axis_angle().z() < 0.0);
  CHECK(Rotation::from_axis_angle(Vec3(0, 0, 2 * pi)).angle() < 1e-15);
}

TEST_CASE("rotation: matrix round trip, composition and inverse") {
  Gen g(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Rotation a = g.rotation(), b = g.rotation();
    CHECK(a.distance(Rotation::from_matrix(a.matrix())) < 1e-10);
    CHECK(((a * b).matrix() - a.matrix() * b.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((a * a.inverse()).angle() < 1e-12);
    const Vec3 v = g.unit_vector();
    CHECK((a.apply(v) - a.matrix() * v).norm() < 1e-15);
  }
}

TEST_CASE("su2: exp/log and covering map") {
  Gen g(22);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 m = g.unit_vector() * g.uniform(0.0, 2 * pi - 1e-3);
    const Su2 u = Su2::exp_axis_angle(m);
    CHECK((u.log_axis_angle() - m).norm() < 1e-10);
    CHECK(u.rotation().distance(Rotation::from_axis_angle(m)) < 1e-10);
    CHECK(u.negated().rotation().distance(u.rotation()) < 1e-10);
  }
  // −I has log 2π·ẑ by convention.
  const Su2 minus = Su2().negated();
  CHECK(minus.log_axis_angle().norm() == doctest::Approx(2 * pi));
}

TEST_CASE("rotation curve: samples, endpoints and resampling") {
  const RotationCurve c([](double t) { return Su2::exp_axis_angle(Vec3(0, pi * t, 0)); }, 1.0, 11);
  CHECK(c.size() == 11);
  CHECK(c.times().back() == 1.0);
  CHECK(c.front().angle() == 0.0);
  CHECK(c.back().distance(Rotation::about(Vec3::UnitY(), pi)) < 1e-15);
  CHECK(c.resampled(21).size() == 21);

  const RotationCurve samples(c.times(), c.rotations());
  CHECK_FALSE(samples.resamplable());
  CHECK_THROWS_AS(samples.resampled(5), DomainError);
}

TEST_CASE("lift_to_su2 requires the identity at t = 0") {
  const RotationCurve shifted([](double t) { return Su2::exp_axis_angle(Vec3(0, 0, 1.0 + t)); }, 1.0, 11);
  CHECK_THROWS_AS(lift_to_su2(shifted), DomainError);
}
