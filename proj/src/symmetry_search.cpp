// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>

#include "spinhol/errors.hpp"
#include "spinhol/spin_core.hpp"
#include "spinhol/stellar.hpp"

namespace spinhol {

namespace {

constexpr std::size_t kMaxSearchStars = 50;

/// Minimum-cost perfect matching on a square cost matrix (Kuhn–Munkres with potentials).
/// Returns assignment[row] = column.
std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t row = 1; row <= n; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const std::size_t r0 = match[col0];
      double delta = inf;
      std::size_t col1 = 0;
      for (std::size_t c = 1; c <= n; ++c) {
        if (used[c]) continue;
        const double reduced = cost[r0 - 1][c - 1] - u[r0] - v[c];
        if (reduced < minv[c]) {
          minv[c] = reduced;
          way[c] = col0;
        }
        if (minv[c] < delta) {
          delta = minv[c];
          col1 = c;
        }
      }
      for (std::size_t c = 0; c <= n; ++c) {
        if (used[c]) {
          u[match[c]] += delta;
          v[c] -= delta;
        } else {
          minv[c] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t c = 1; c <= n; ++c) assignment[match[c] - 1] = c - 1;
  return assignment;
}

Mat3 pair_frame(const Vec3& a, const Vec3& b) {
  const Vec3 e2 = a.cross(b).normalized();
  Mat3 f;
  f.col(0) = a;
  f.col(1) = e2;
  f.col(2) = a.cross(e2);
  return f;
}

int class_size(const std::vector<Star>& stars, int multiplicity) {
  return static_cast<int>(std::count_if(stars.begin(), stars.end(),
                                        [&](const Star& s) { return s.multiplicity == multiplicity; }));
}

bool rotation_less(const Rotation& a, const Rotation& b) {
  if (std::abs(a.angle() - b.angle()) > 1e-9) return a.angle() < b.angle();
  const Vec3& x = a.axis_angle();
  const Vec3& y = b.axis_angle();
  for (int i = 0; i < 3; ++i) {
    if (std::abs(x(i) - y(i)) > 1e-9) return x(i) < y(i);
  }
  return false;
}

}  // namespace

bool check_congruence(const Constellation& c1, const Constellation& c2, const Rotation& r, double tol) {
  const std::vector<Vec3> a = c1.rotated(r).expanded();
  const std::vector<Vec3> b = c2.expanded();
  if (a.size() != b.size()) return false;
  // Cheap rejection: every rotated star needs some partner within tol.
  for (const Vec3& x : a) {
    const bool near = std::any_of(b.begin(), b.end(), [&](const Vec3& y) { return (x - y).norm() <= tol; });
    if (!near) return false;
  }
  std::vector<std::vector<double>> cost(a.size(), std::vector<double>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) cost[i][j] = (a[i] - b[j]).norm();
  }
  const std::vector<std::size_t> assignment = hungarian(cost);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cost[i][assignment[i]] > tol) return false;
  }
  return true;
}

SymmetrySearch symmetry_candidates(const Constellation& c, double tol) {
  const std::vector<Star>& stars = c.stars();
  if (stars.empty()) throw DomainError("an empty constellation has no finite symmetry group");
  if (static_cast<std::size_t>(c.count()) > kMaxSearchStars) {
    throw DomainError("symmetry search is limited to constellations of at most 50 stars");
  }

  // Reference star from the rarest multiplicity class.
  std::size_t ia = 0;
  for (std::size_t i = 1; i < stars.size(); ++i) {
    if (class_size(stars, stars[i].multiplicity) < class_size(stars, stars[ia].multiplicity)) ia = i;
  }
  const Vec3& a = stars[ia].direction;

  // Second reference: rarest class among stars off a's axis, then the most transverse.
  std::optional<std::size_t> ib;
  for (std::size_t i = 0; i < stars.size(); ++i) {
    const double sine = a.cross(stars[i].direction).norm();
    if (sine < 1e-6) continue;
    if (!ib) {
      ib = i;
      continue;
    }
    const int ci = class_size(stars, stars[i].multiplicity);
    const int cb = class_size(stars, stars[*ib].multiplicity);
    if (ci < cb || (ci == cb && sine > a.cross(stars[*ib].direction).norm() + 1e-12)) ib = i;
  }
  if (!ib) return SymmetrySearch{{}, a};
  const Vec3& b = stars[*ib].direction;
  const Mat3 source = pair_frame(a, b);
  const double cos_ab = a.dot(b);

  std::vector<Mat3> accepted;
  SymmetrySearch result;
  for (const Star& a2 : stars) {
    if (a2.multiplicity != stars[ia].multiplicity) continue;
    for (const Star& b2 : stars) {
      if (b2.multiplicity != stars[*ib].multiplicity) continue;
      if (std::abs(a2.direction.dot(b2.direction) - cos_ab) > tol) continue;
      if (a2.direction.cross(b2.direction).norm() < 1e-6) continue;
      const Mat3 m = pair_frame(a2.direction, b2.direction) * source.transpose();
      const bool duplicate =
          std::any_of(accepted.begin(), accepted.end(), [&](const Mat3& x) { return (x - m).cwiseAbs().maxCoeff() < 1e-6; });
      if (duplicate) continue;
      const Rotation r = Rotation::from_matrix(m);
      if (!check_congruence(c, c, r, tol)) continue;
      accepted.push_back(m);
      result.rotations.push_back(r);
    }
  }
  std::sort(result.rotations.begin(), result.rotations.end(), rotation_less);
  return result;
}

bool multiconstellation_symmetric(const MultiConstellation& mc, const Rotation& r, double tol) {
  std::optional<Complex> common;
  for (const WeightedConstellation& w : mc.multiplets) {
    if (!w.constellation) continue;
    if (!check_congruence(*w.constellation, *w.constellation, r, tol)) return false;
    const Vector image = wigner_D(w.j, r) * w.component;
    const Complex phase = w.component.dot(image);
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    if (!common) common = phase;
    if (std::abs(phase - *common) > tol) return false;
  }
  return true;
}

SymmetrySearch multiconstellation_symmetries(const MultiConstellation& mc, double tol) {
  SymmetrySearch search = symmetry_candidates(*mc.principal().constellation, tol);
  if (search.continuous_axis) return search;
  std::erase_if(search.rotations, [&](const Rotation& r) { return !multiconstellation_symmetric(mc, r, tol); });
  return search;
}

}  // namespace spinhol
