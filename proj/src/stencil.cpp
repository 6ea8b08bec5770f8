// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinhol/stencil.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Dense>

namespace spinhol::stencil {

std::vector<double> derivative_weights(std::span<const double> nodes, double x0) {
  const std::size_t n = nodes.size();
  // c[j][d]: weight of node j for the d-th derivative, d ∈ {0, 1}.
  std::vector<std::array<double, 2>> c(n, {0.0, 0.0});
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min<std::size_t>(i, 1);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = c[j][1];
  return w;
}

std::vector<double> integral_weights(std::span<const double> nodes, double a, double b) {
  const auto n = static_cast<Eigen::Index>(nodes.size());
  const double h = b - a;
  // Local coordinate u = (x − a)/h keeps the Vandermonde system well conditioned.
  Eigen::MatrixXd vander(n, n);
  Eigen::VectorXd moments(n);
  for (Eigen::Index p = 0; p < n; ++p) {
    moments(p) = 1.0 / static_cast<double>(p + 1);
    for (Eigen::Index j = 0; j < n; ++j) vander(p, j) = std::pow((nodes[j] - a) / h, static_cast<double>(p));
  }
  const Eigen::VectorXd local = vander.fullPivLu().solve(moments);
  std::vector<double> w(nodes.size());
  for (Eigen::Index j = 0; j < n; ++j) w[j] = h * local(j);
  return w;
}

std::size_t window_start(std::size_t count, std::size_t center, std::size_t width) {
  width = std::min(width, count);
  const std::size_t half = width / 2;
  const std::size_t start = center >= half ? center - half : 0;
  return std::min(start, count - width);
}

}  // namespace spinhol::stencil
