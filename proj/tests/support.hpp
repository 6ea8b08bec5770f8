// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

// Random generators and small helpers shared by the test binaries.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/QR>

#include "spinhol/grassmann.hpp"
#include "spinhol/holonomy.hpp"
#include "spinhol/linalg.hpp"
#include "spinhol/rotation.hpp"

namespace spinhol::test {

using std::numbers::pi;

/// Deterministic generator; all draws derive from the raw 64-bit stream so results do not
/// depend on the standard library's distributions.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1.0p-53);
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)) % (hi - lo + 1); }

  /// Box–Muller.
  double normal() {
    const double u = uniform(0x1.0p-53, 1.0);
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * pi * v);
  }
  Complex cnormal() { return {normal(), normal()}; }

  Vector ket(Eigen::Index n) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = cnormal();
    return v.normalized();
  }
  Matrix gaussian(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cnormal();
    return m;
  }
  Matrix hermitian(Eigen::Index n) {
    const Matrix g = gaussian(n, n);
    return 0.5 * (g + g.adjoint());
  }
  /// Haar-distributed unitary (QR with the phase of R's diagonal removed).
  Matrix unitary(Eigen::Index n) {
    const Eigen::HouseholderQR<Matrix> qr(gaussian(n, n));
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR();
    for (Eigen::Index i = 0; i < n; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
    return q;
  }
  /// Orthonormal n×k frame.
  Matrix frame(Eigen::Index n, Eigen::Index k) { return unitary(n).leftCols(k); }
  Vec3 unit_vector() {
    Vec3 v(normal(), normal(), normal());
    return v.normalized();
  }
  Rotation rotation() { return Rotation::about(unit_vector(), uniform(0.0, pi)); }
  KPlane plane(SpinQuantum s, int k) { return KPlane(s, frame(s.dimension(), k)); }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<double> uniform_times(std::size_t n, double duration = 1.0) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = duration * static_cast<double>(i) / static_cast<double>(n - 1);
  t.back() = duration;
  return t;
}

/// Φ(t) = exp(−i(H1 t + H2 t²))·Φ0 sampled at the given times: a smooth curve of planes with a
/// generically non-zero connection.
inline FrameCurve smooth_curve(SpinQuantum s, const Matrix& h1, const Matrix& h2, const Matrix& frame0,
                               const std::vector<double>& times) {
  std::vector<Matrix> frames;
  for (double t : times) frames.push_back(expm_i_hermitian(h1 * t + h2 * (t * t)) * frame0);
  return FrameCurve(s, times, std::move(frames));
}

inline FrameCurve smooth_curve(SpinQuantum s, const Matrix& h1, const Matrix& h2, const Matrix& frame0,
                               std::size_t samples) {
  return smooth_curve(s, h1, h2, frame0, uniform_times(samples));
}

inline Matrix pauli_x() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

inline Matrix pauli_z() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

}  // namespace spinhol::test
