// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinhol/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/SVD>

#include "spinhol/errors.hpp"
#include "spinhol/spin_core.hpp"
#include "spinhol/stencil.hpp"

namespace spinhol {

FrameCurve::FrameCurve(SpinQuantum s, std::vector<double> times, std::vector<Matrix> frames)
    : s_(s), times_(std::move(times)), frames_(std::move(frames)) {
  if (times_.size() != frames_.size()) throw DomainError("times and frames differ in length");
  if (times_.size() < 2) throw DomainError("a frame curve needs at least 2 samples");
  const auto rows = frames_.front().rows();
  const auto cols = frames_.front().cols();
  if (rows != s.dimension()) throw DomainError("frame row count does not match the spin");
  for (std::size_t i = 0; i < frames_.size(); ++i) {
    if (frames_[i].rows() != rows || frames_[i].cols() != cols) {
      throw DomainError("frame " + std::to_string(i) + " has a different shape");
    }
    if (i > 0 && !(times_[i] > times_[i - 1])) throw DomainError("frame curve times must increase");
    if (unitarity_defect(frames_[i]) > 1e-12) {
      throw DomainError("frame " + std::to_string(i) + " is not orthonormal");
    }
  }
}

double FrameCurve::max_step() const {
  double worst = 0.0;
  for (std::size_t i = 1; i < frames_.size(); ++i) worst = std::max(worst, max_abs(frames_[i] - frames_[i - 1]));
  return worst;
}

FrameCurve FrameCurve::subsampled(std::size_t stride) const {
  std::vector<double> t;
  std::vector<Matrix> f;
  for (std::size_t i = 0; i < size(); i += stride) {
    t.push_back(times_[i]);
    f.push_back(frames_[i]);
  }
  return FrameCurve(s_, std::move(t), std::move(f));
}

FrameCurve frame_curve_from_rotations(const KPlane& p, const RotationCurve& curve, int samples, Execution exec) {
  const RotationCurve sampled =
      (samples > 0 && static_cast<std::size_t>(samples) != curve.size()) ? curve.resampled(samples) : curve;
  const std::vector<Su2> lift = lift_to_su2(sampled);
  std::vector<Matrix> frames(lift.size());
  for_each_index(lift.size(), exec, [&](std::size_t i) { frames[i] = wigner_D(p.spin(), lift[i]) * p.frame(); });
  return FrameCurve(p.spin(), sampled.times(), std::move(frames));
}

ConnectionSample wz_connection(const FrameCurve& fc, std::size_t i) {
  const std::size_t n = fc.size();
  const std::size_t start = stencil::window_start(n, i, kConnectionStencil);
  const std::size_t width = std::min(kConnectionStencil, n);
  const std::span<const double> nodes(fc.times().data() + start, width);
  const std::vector<double> w = stencil::derivative_weights(nodes, fc.times()[i]);
  Matrix derivative = Matrix::Zero(fc.frame(i).rows(), fc.frame(i).cols());
  for (std::size_t j = 0; j < width; ++j) derivative += w[j] * fc.frame(start + j);
  const Matrix raw = fc.frame(i).adjoint() * derivative;
  return ConnectionSample{0.5 * (raw - raw.adjoint()), max_abs(0.5 * (raw + raw.adjoint()))};
}

std::vector<ConnectionSample> wz_connections(const FrameCurve& fc, Execution exec) {
  std::vector<ConnectionSample> out(fc.size());
  for_each_index(fc.size(), exec, [&](std::size_t i) { out[i] = wz_connection(fc, i); });
  return out;
}

namespace {

/// ∫ A dt over [t_i, t_{i+1}] from the cubic through the four nearest node values.
Matrix integrated_connection(const FrameCurve& fc, const std::vector<ConnectionSample>& conns, std::size_t i) {
  const std::size_t n = fc.size();
  const std::size_t width = std::min<std::size_t>(4, n);
  const std::size_t start = stencil::window_start(n, i + 1, width);
  const std::span<const double> nodes(fc.times().data() + start, width);
  const std::vector<double> w = stencil::integral_weights(nodes, fc.times()[i], fc.times()[i + 1]);
  Matrix sum = Matrix::Zero(conns[i].a.rows(), conns[i].a.cols());
  for (std::size_t j = 0; j < width; ++j) sum += w[j] * conns[start + j].a;
  return sum;
}

Matrix step_generator(const FrameCurve& fc, const std::vector<ConnectionSample>& conns, OrderingScheme scheme,
                      std::size_t i) {
  if (scheme == OrderingScheme::midpoint) {
    const Matrix m = fc.frame(i).adjoint() * fc.frame(i + 1);
    return 0.5 * (m - m.adjoint());
  }
  const double h = fc.times()[i + 1] - fc.times()[i];
  const Matrix& a0 = conns[i].a;
  const Matrix& a1 = conns[i + 1].a;
  // Right-multiplying product F' = F·A: Ω = ∫A + (h²/12)[A(t_i), A(t_{i+1})].
  return integrated_connection(fc, conns, i) + (h * h / 12.0) * (a0 * a1 - a1 * a0);
}

Matrix ordered_product(const FrameCurve& fc, const std::vector<ConnectionSample>& conns, OrderingScheme scheme,
                       Execution exec) {
  const std::size_t steps = fc.size() - 1;
  std::vector<Matrix> factors(steps);
  for_each_index(steps, exec, [&](std::size_t i) {
    factors[i] = expm_anti_hermitian(step_generator(fc, conns, scheme, i));
  });
  const auto k = fc.k();
  Matrix f = Matrix::Identity(k, k);
  for (const Matrix& e : factors) f = f * e;
  return f;
}

struct CoreResult {
  Matrix q, p, f, u;
  double min_sv = 0.0;
};

CoreResult holonomy_core(const FrameCurve& fc, const std::vector<ConnectionSample>& conns, OrderingScheme scheme,
                         Execution exec) {
  CoreResult r;
  r.q = overlap_matrix(fc);
  r.min_sv = Eigen::JacobiSVD<Matrix>(r.q).singularValues().minCoeff();
  r.p = polar_part(r.q);
  r.f = ordered_product(fc, conns, scheme, exec);
  r.u = r.p * r.f.adjoint();
  return r;
}

}  // namespace

Matrix path_ordered_exponential(const FrameCurve& fc, OrderingScheme scheme, Execution exec) {
  std::vector<ConnectionSample> conns;
  if (scheme == OrderingScheme::high_order) conns = wz_connections(fc, exec);
  return ordered_product(fc, conns, scheme, exec);
}

Matrix overlap_matrix(const FrameCurve& fc) { return fc.frames().front().adjoint() * fc.frames().back(); }

Matrix polar_part(const Matrix& q, double tol) {
  const Eigen::JacobiSVD<Matrix> svd(q, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double smallest = svd.singularValues().minCoeff();
  if (smallest < tol) {
    throw DegenerateOverlapError("overlap matrix is singular (smallest singular value " + std::to_string(smallest) +
                                 "); the endpoint planes are not comparable");
  }
  return svd.matrixU() * svd.matrixV().adjoint();
}

Holonomy wz_holonomy(const FrameCurve& fc, const HolonomyOptions& options) {
  const std::vector<ConnectionSample> conns = wz_connections(fc, options.exec);
  const CoreResult core = holonomy_core(fc, conns, options.scheme, options.exec);

  Holonomy h;
  h.u = core.u;
  h.q = core.q;
  h.p = core.p;
  h.f = core.f;
  h.min_overlap_singular_value = core.min_sv;
  h.f_unitarity_defect = unitarity_defect(core.f);
  h.samples = fc.size();
  for (const auto& c : conns) {
    h.max_connection_norm = std::max(h.max_connection_norm, max_abs(c.a));
    h.max_hermitian_defect = std::max(h.max_hermitian_defect, c.hermitian_defect);
  }

  const bool halvable = (fc.size() - 1) % 2 == 0 && fc.size() >= 2 * kConnectionStencil - 1;
  if (options.estimate_error && halvable) {
    const FrameCurve coarse = fc.subsampled(2);
    const std::vector<ConnectionSample> coarse_conns = wz_connections(coarse, options.exec);
    const CoreResult coarse_core = holonomy_core(coarse, coarse_conns, options.scheme, options.exec);
    h.step_halving_delta = max_abs(core.u - coarse_core.u);
  }
  return h;
}

double abelian_geometric_phase(const FrameCurve& fc) {
  if (fc.k() != 1) throw DomainError("the abelian geometric phase needs k = 1");
  const Complex overlap = overlap_matrix(fc)(0, 0);
  if (std::abs(overlap) < kDegenerateOverlapTol) {
    throw DegenerateOverlapError("endpoint states are orthogonal; the total phase is undefined");
  }
  const std::vector<ConnectionSample> conns = wz_connections(fc, Execution::serial);
  Complex integral = 0.0;
  for (std::size_t i = 0; i + 1 < fc.size(); ++i) integral += integrated_connection(fc, conns, i)(0, 0);
  const double phase = std::arg(overlap) + (kI * integral).real();
  return std::remainder(phase, 2.0 * std::numbers::pi);
}

}  // namespace spinhol
