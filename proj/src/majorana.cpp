// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "spinhol/errors.hpp"
#include "spinhol/stellar.hpp"

namespace spinhol {

namespace {

double binomial(int n, int r) {
  double b = 1.0;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

double l1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Parlett–Reinsch diagonal similarity, radix 2 so the scaling is exact.
void balance(Matrix& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double col = 0.0, row = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        col += l1(a(j, i));
        row += l1(a(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      double f = 1.0;
      const double total = col + row;
      double g = row / radix;
      while (col < g) {
        f *= radix;
        col *= radix * radix;
      }
      g = row * radix;
      while (col > g) {
        f /= radix;
        col /= radix * radix;
      }
      if ((col + row) / f < 0.95 * total) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

Complex horner(std::span<const Complex> c, Complex z, Complex* derivative) {
  Complex p = 0.0, dp = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  *derivative = dp;
  return p;
}

bool direction_less(const Vec3& a, const Vec3& b) {
  if (std::abs(a.z() - b.z()) > 1e-12) return a.z() > b.z();
  const double pa = std::atan2(a.y(), a.x());
  const double pb = std::atan2(b.y(), b.x());
  return pa < pb;
}

}  // namespace

Constellation::Constellation(std::vector<Star> stars) : stars_(std::move(stars)) {}

int Constellation::count() const {
  int total = 0;
  for (const Star& s : stars_) total += s.multiplicity;
  return total;
}

std::vector<Vec3> Constellation::expanded() const {
  std::vector<Vec3> out;
  for (const Star& s : stars_) out.insert(out.end(), static_cast<std::size_t>(s.multiplicity), s.direction);
  return out;
}

Constellation Constellation::rotated(const Rotation& r) const {
  const Mat3 m = r.matrix();
  std::vector<Star> out = stars_;
  for (Star& s : out) s.direction = (m * s.direction).normalized();
  return Constellation(std::move(out));
}

std::vector<Complex> majorana_polynomial(const Vector& psi) {
  const int twice_s = static_cast<int>(psi.size()) - 1;
  std::vector<Complex> c(psi.size());
  for (int r = 0; r <= twice_s; ++r) {
    // Row r holds m = s − r, contributing to z^{s+m} = z^{2s−r} with sign (−1)^{s−m} = (−1)^r.
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    c[static_cast<std::size_t>(twice_s - r)] = sign * std::sqrt(binomial(twice_s, r)) * psi(r);
  }
  return c;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  if (coeffs.empty()) return {};
  const std::size_t degree = coeffs.size() - 1;
  if (degree == 0) return {};
  if (coeffs.back() == Complex(0.0)) throw DomainError("leading polynomial coefficient is zero");
  if (degree == 1) return {-coeffs[0] / coeffs[1]};

  const auto n = static_cast<Eigen::Index>(degree);
  Matrix companion = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) companion(0, j) = -coeffs[degree - 1 - static_cast<std::size_t>(j)] / coeffs[degree];
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  balance(companion);
  const Eigen::ComplexEigenSolver<Matrix> eig(companion, false);

  std::vector<Complex> roots(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    Complex z = eig.eigenvalues()(static_cast<Eigen::Index>(i));
    Complex dp;
    Complex p = horner(coeffs, z, &dp);
    for (int iter = 0; iter < 3 && dp != Complex(0.0); ++iter) {
      const Complex candidate = z - p / dp;
      Complex dq;
      const Complex q = horner(coeffs, candidate, &dq);
      if (!(std::abs(q) < std::abs(p))) break;
      z = candidate;
      p = q;
      dp = dq;
    }
    roots[i] = z;
  }
  return roots;
}

Vec3 star_from_root(Complex z) {
  const double r2 = std::norm(z);
  if (!std::isfinite(r2)) return Vec3(0.0, 0.0, -1.0);
  return Vec3(2.0 * z.real(), 2.0 * z.imag(), 1.0 - r2) / (1.0 + r2);
}

Constellation majorana_constellation(const Vector& psi, double merge_tol) {
  if (psi.size() == 0 || psi.norm() == 0.0) throw DomainError("the zero vector has no constellation");
  const std::vector<Complex> c = majorana_polynomial(psi);
  const std::size_t twice_s = c.size() - 1;
  if (twice_s == 0) return Constellation();

  double largest = 0.0;
  for (const Complex& x : c) largest = std::max(largest, std::abs(x));
  const double cutoff = 1e-12 * largest;
  std::size_t low = 0;
  while (std::abs(c[low]) <= cutoff) ++low;
  std::size_t top = twice_s;
  while (std::abs(c[top]) <= cutoff) --top;

  std::vector<Vec3> points;
  points.insert(points.end(), low, Vec3(0.0, 0.0, 1.0));
  points.insert(points.end(), twice_s - top, Vec3(0.0, 0.0, -1.0));
  const std::span<const Complex> reduced(c.data() + low, top - low + 1);
  for (const Complex& z : polynomial_roots(reduced)) points.push_back(star_from_root(z));

  // Greedy clustering in input order; each cluster keeps the running sum of its members.
  std::vector<Vec3> sums;
  std::vector<Vec3> seeds;
  std::vector<int> counts;
  for (const Vec3& p : points) {
    bool merged = false;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      if ((seeds[i] - p).norm() < merge_tol) {
        sums[i] += p;
        ++counts[i];
        merged = true;
        break;
      }
    }
    if (!merged) {
      seeds.push_back(p);
      sums.push_back(p);
      counts.push_back(1);
    }
  }
  std::vector<Star> stars;
  for (std::size_t i = 0; i < seeds.size(); ++i) stars.push_back(Star{sums[i].normalized(), counts[i]});
  std::sort(stars.begin(), stars.end(),
            [](const Star& a, const Star& b) { return direction_less(a.direction, b.direction); });
  return Constellation(std::move(stars));
}

}  // namespace spinhol
