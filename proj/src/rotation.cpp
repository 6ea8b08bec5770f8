// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinhol/rotation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinhol/errors.hpp"

namespace spinhol {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Rotation Rotation::from_axis_angle(const Vec3& axis_angle) {
  const double theta = axis_angle.norm();
  if (theta <= kPi) return Rotation(axis_angle);
  const Vec3 axis = axis_angle / theta;
  // Reduce into (−π, π], then fold a negative angle onto the opposite axis.
  double reduced = std::remainder(theta, 2.0 * kPi);
  if (reduced <= -kPi) reduced += 2.0 * kPi;
  return Rotation(axis * reduced);
}

Rotation Rotation::about(const Vec3& axis, double angle) {
  const double n = axis.norm();
  if (n == 0.0) throw DomainError("rotation axis must be non-zero");
  return from_axis_angle(axis / n * angle);
}

Rotation Rotation::from_matrix(const Mat3& r) {
  Eigen::AngleAxisd aa(r);
  return from_axis_angle(aa.axis() * aa.angle());
}

Mat3 Rotation::matrix() const {
  const double theta = m_.norm();
  if (theta == 0.0) return Mat3::Identity();
  return Eigen::AngleAxisd(theta, m_ / theta).toRotationMatrix();
}

Rotation Rotation::operator*(const Rotation& rhs) const {
  return (canonical_lift() * rhs.canonical_lift()).rotation();
}

Su2 Rotation::canonical_lift() const { return Su2::exp_axis_angle(m_); }

double Rotation::distance(const Rotation& other) const {
  // Angle of the relative rotation; atan2 keeps full precision near zero.
  const Eigen::Quaterniond q = canonical_lift().quaternion().conjugate() * other.canonical_lift().quaternion();
  return 2.0 * std::atan2(q.vec().norm(), std::abs(q.w()));
}

Su2 Su2::exp_axis_angle(const Vec3& m) {
  const double theta = m.norm();
  if (theta == 0.0) return Su2();
  return Su2(Eigen::Quaterniond(Eigen::AngleAxisd(theta, m / theta)));
}

Vec3 Su2::log_axis_angle() const {
  const Vec3 v = q_.vec();
  const double s = v.norm();
  if (s == 0.0) {
    // ±I: the identity, or the 2π rotation about an arbitrary axis.
    return q_.w() > 0.0 ? Vec3::Zero() : Vec3(0.0, 0.0, 2.0 * kPi);
  }
  const double psi = 2.0 * std::atan2(s, q_.w());
  return v / s * psi;
}

Rotation Su2::rotation() const {
  // Flip into the w ≥ 0 hemisphere so the angle lands in [0, π].
  const Su2 canonical = q_.w() < 0.0 ? negated() : *this;
  return Rotation::from_axis_angle(canonical.log_axis_angle());
}

RotationCurve::RotationCurve(Path path, double duration, int samples) : path_(std::move(path)) {
  if (samples < 2) throw DomainError("a rotation curve needs at least 2 samples");
  if (!(duration > 0.0)) throw DomainError("rotation curve duration must be positive");
  times_.resize(samples);
  rotations_.resize(samples);
  for (int i = 0; i < samples; ++i) {
    // Endpoints are set exactly so t = T reproduces the path's endpoint bit for bit.
    const double t = (i == samples - 1) ? duration : duration * i / (samples - 1);
    times_[i] = t;
    rotations_[i] = path_(t).rotation();
  }
}

RotationCurve::RotationCurve(std::vector<double> times, std::vector<Rotation> rotations)
    : times_(std::move(times)), rotations_(std::move(rotations)) {
  if (times_.size() != rotations_.size()) throw DomainError("times and rotations differ in length");
  if (times_.size() < 2) throw DomainError("a rotation curve needs at least 2 samples");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) throw DomainError("rotation curve times must increase");
  }
}

RotationCurve RotationCurve::resampled(int samples) const {
  if (!path_) throw DomainError("curve has no path function and cannot be resampled");
  return RotationCurve(path_, duration(), samples);
}

std::vector<Su2> lift_to_su2(const RotationCurve& curve) {
  const auto& rots = curve.rotations();
  if (rots.front().angle() > 1e-12) throw DomainError("curve must start at the identity");
  const double min_overlap = std::cos(kPi / 4.0);
  std::vector<Su2> lift;
  lift.reserve(rots.size());
  lift.emplace_back();
  for (std::size_t i = 1; i < rots.size(); ++i) {
    Su2 g = rots[i].canonical_lift();
    const double overlap = g.dot(lift.back());
    if (std::abs(overlap) <= min_overlap) {
      throw RefinementRequiredError("rotation between samples " + std::to_string(i - 1) + " and " +
                                    std::to_string(i) + " reaches pi/2; refine the curve");
    }
    if (overlap < 0.0) g = g.negated();
    lift.push_back(g);
  }
  return lift;
}

}  // namespace spinhol
