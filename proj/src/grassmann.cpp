// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinhol/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "spinhol/errors.hpp"

namespace spinhol {

KPlane::KPlane(SpinQuantum s, Matrix frame) : s_(s), frame_(std::move(frame)) {
  if (frame_.rows() != s.dimension()) {
    throw DomainError("frame has " + std::to_string(frame_.rows()) + " rows, spin needs " +
                      std::to_string(s.dimension()));
  }
  if (frame_.cols() < 1 || frame_.cols() > frame_.rows()) throw DomainError("plane dimension k out of range");
  if (unitarity_defect(frame_) > 1e-12) throw DomainError("frame columns are not orthonormal");
}

KPlane plane_from_kets(SpinQuantum s, std::span<const Vector> kets) {
  const int n = s.dimension();
  if (kets.empty()) throw DomainError("a plane needs at least one ket");
  Matrix m(n, static_cast<Eigen::Index>(kets.size()));
  for (std::size_t j = 0; j < kets.size(); ++j) {
    if (kets[j].size() != n) {
      throw DomainError("ket " + std::to_string(j) + " has length " + std::to_string(kets[j].size()) +
                        ", expected " + std::to_string(n));
    }
    m.col(static_cast<Eigen::Index>(j)) = kets[j];
  }
  if (m.cols() > n) throw DegenerateInputError("more kets than the space dimension");
  const Eigen::JacobiSVD<Matrix> svd(m);
  if (svd.singularValues().minCoeff() < kRankTol) {
    throw DegenerateInputError("kets are linearly dependent (smallest singular value " +
                               std::to_string(svd.singularValues().minCoeff()) + ")");
  }
  if (unitarity_defect(m) < 1e-14) return KPlane(s, std::move(m));

  // Modified Gram–Schmidt with one re-orthogonalisation pass.
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        const Complex proj = m.col(i).dot(m.col(j));
        m.col(j) -= proj * m.col(i);
      }
    }
    m.col(j).normalize();
  }
  return KPlane(s, std::move(m));
}

double plane_distance(const KPlane& a, const KPlane& b) {
  if (a.spin() != b.spin() || a.k() != b.k()) throw DomainError("planes must share s and k");
  const Matrix overlap = a.frame().adjoint() * b.frame();
  const Matrix residual = b.frame() - a.frame() * overlap;
  const double cos_min = Eigen::JacobiSVD<Matrix>(overlap).singularValues().minCoeff();
  const double sin_max = Eigen::JacobiSVD<Matrix>(residual).singularValues().maxCoeff();
  return std::clamp(std::atan2(sin_max, cos_min), 0.0, std::acos(0.0));
}

KPlane rotate_plane(const KPlane& p, const Rotation& r) { return rotate_plane(p, wigner_D(p.spin(), r)); }

KPlane rotate_plane(const KPlane& p, const Matrix& u) {
  Matrix rotated = u * p.frame();
  return KPlane(p.spin(), std::move(rotated));
}

Matrix compress(const KPlane& p, const Matrix& op) { return p.frame().adjoint() * op * p.frame(); }

AnticoherenceReport anticoherence(const KPlane& p, int t_max, double tol) {
  const SpinQuantum s = p.spin();
  if (t_max < 0 || t_max > s.twice_s) throw DomainError("t_max must satisfy 0 <= t_max <= 2s");
  AnticoherenceReport report;
  report.tol = tol;
  bool still_anticoherent = true;
  for (int ell = 1; ell <= t_max; ++ell) {
    double worst = 0.0;
    for (int m = -ell; m <= ell; ++m) {
      // Spectral norm of the block: invariant under a change of basis inside the plane and an
      // upper bound for every matrix element.
      const Matrix block = compress(p, polarization_tensor(s, ell, m).matrix);
      worst = std::max(worst, Eigen::JacobiSVD<Matrix>(block).singularValues()(0));
    }
    report.residuals.push_back(worst);
    if (still_anticoherent && worst < tol) {
      report.order = ell;
    } else {
      still_anticoherent = false;
    }
  }
  return report;
}

double spin_expectation_residual(const KPlane& p) {
  const SpinOperators ops = spin_operators(p.spin());
  return std::max({max_abs(compress(p, ops.sx)), max_abs(compress(p, ops.sy)), max_abs(compress(p, ops.sz))});
}

SymmetryCheck is_symmetry_rotation(const KPlane& p, const Rotation& r, double tol) {
  const double d = plane_distance(p, rotate_plane(p, r));
  return SymmetryCheck{d < tol, d};
}

}  // namespace spinhol
