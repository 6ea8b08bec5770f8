// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace spinhol::stencil {

/// First-derivative weights at x0 for arbitrary distinct nodes (Fornberg's recursion).
/// With n nodes the rule is exact for polynomials of degree n − 1.
std::vector<double> derivative_weights(std::span<const double> nodes, double x0);

/// Weights w with Σ w_j f(x_j) = ∫_a^b p(x) dx for the interpolating polynomial p of f.
std::vector<double> integral_weights(std::span<const double> nodes, double a, double b);

/// First index of a window of `width` consecutive samples out of `count`, as centred on
/// `center` as the ends allow. `width` is clipped to `count`.
std::size_t window_start(std::size_t count, std::size_t center, std::size_t width);

}  // namespace spinhol::stencil
