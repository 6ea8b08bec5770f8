// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Geometry>

#include "spinhol/linalg.hpp"

namespace spinhol {

class Su2;

/// An element of SO(3) stored as a canonical axis-angle vector m: the direction is the
/// rotation axis and |m| ∈ [0, π] the angle. At |m| = π both m and −m describe the same
/// rotation; their canonical SU(2) lifts differ by a sign.
class Rotation {
 public:
  Rotation() = default;

  /// Any axis-angle vector; the angle is reduced into [0, π].
  static Rotation from_axis_angle(const Vec3& axis_angle);
  /// Rotation by `angle` about the unit vector `axis`.
  static Rotation about(const Vec3& axis, double angle);
  static Rotation from_matrix(const Mat3& r);

  const Vec3& axis_angle() const { return m_; }
  double angle() const { return m_.norm(); }
  Mat3 matrix() const;
  Vec3 apply(const Vec3& v) const { return matrix() * v; }
  Rotation inverse() const { return Rotation(-m_); }
  Rotation operator*(const Rotation& rhs) const;

  /// The lift e^{−i m·σ/2} with |m| ≤ π (non-negative real part).
  Su2 canonical_lift() const;

  /// Angle of the rotation this⁻¹·other, in [0, π].
  double distance(const Rotation& other) const;

 private:
  explicit Rotation(const Vec3& m) : m_(m) {}
  Vec3 m_ = Vec3::Zero();
};

/// A unit quaternion (w, v) read as the SU(2) matrix w·I − i v·σ.
class Su2 {
 public:
  Su2() = default;
  explicit Su2(const Eigen::Quaterniond& q) : q_(q.normalized()) {}

  /// e^{−i m·σ/2}; |m| may exceed π, in which case the result is not the canonical lift.
  static Su2 exp_axis_angle(const Vec3& m);

  /// Vector m with |m| ∈ [0, 2π] such that exp_axis_angle(m) == *this.
  Vec3 log_axis_angle() const;
  Rotation rotation() const;

  Su2 operator*(const Su2& rhs) const { return Su2(q_ * rhs.q_); }
  Su2 inverse() const { return Su2(q_.conjugate()); }
  Su2 negated() const { return Su2(Eigen::Quaterniond(-q_.coeffs())); }
  double dot(const Su2& other) const { return q_.coeffs().dot(other.q_.coeffs()); }
  const Eigen::Quaterniond& quaternion() const { return q_; }

 private:
  Eigen::Quaterniond q_ = Eigen::Quaterniond::Identity();
};

/// A continuous path t ↦ R(t) ∈ SO(3), t ∈ [0, T], held as uniform samples of canonical
/// axis-angle rotations. When built from a path function it can be resampled at any
/// resolution; the path's SU(2) values are only used to produce the SO(3) samples.
class RotationCurve {
 public:
  using Path = std::function<Su2(double)>;

  RotationCurve(Path path, double duration, int samples);
  /// A curve known only through its samples (times must increase strictly).
  RotationCurve(std::vector<double> times, std::vector<Rotation> rotations);

  const std::vector<double>& times() const { return times_; }
  const std::vector<Rotation>& rotations() const { return rotations_; }
  std::size_t size() const { return times_.size(); }
  double duration() const { return times_.back() - times_.front(); }
  const Rotation& front() const { return rotations_.front(); }
  const Rotation& back() const { return rotations_.back(); }

  bool resamplable() const { return static_cast<bool>(path_); }
  const Path& path() const { return path_; }
  /// Same path at a new uniform resolution. Throws DomainError for sample-only curves.
  RotationCurve resampled(int samples) const;

 private:
  Path path_;
  std::vector<double> times_;
  std::vector<Rotation> rotations_;
};

/// Continuous SU(2) lift of the sampled curve with R̃(0) = I. The branch at each sample is
/// chosen by continuity with the previous one; a step whose rotation angle reaches π/2
/// leaves the branch ambiguous and raises RefinementRequiredError.
std::vector<Su2> lift_to_su2(const RotationCurve& curve);

}  // namespace spinhol
