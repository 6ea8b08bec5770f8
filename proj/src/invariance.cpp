// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "spinhol/gates_lab.hpp"

namespace spinhol {

std::vector<SweepPoint> invariance_sweep(const KPlane& p, const RotationCurve& base, const Matrix& reference,
                                         const SweepConfig& config, Execution exec) {
  std::vector<std::uint64_t> seeds = config.seeds;
  std::vector<double> amplitudes = config.amplitudes;
  std::sort(seeds.begin(), seeds.end());
  std::sort(amplitudes.begin(), amplitudes.end());

  // One grid point per task; the holonomy kernels inside stay serial to avoid nesting.
  GateOptions inner = config.gate;
  inner.holonomy.exec = Execution::serial;

  std::vector<SweepPoint> points(seeds.size() * amplitudes.size());
  for_each_index(points.size(), exec, [&](std::size_t i) {
    SweepPoint& pt = points[i];
    pt.seed = seeds[i / amplitudes.size()];
    pt.amplitude = amplitudes[i % amplitudes.size()];
    const RotationCurve curve = perturb_curve(base, pt.amplitude, config.n_modes, pt.seed);
    const GateResult g = extract_gate(p, curve, inner);
    pt.deviation = max_abs(g.holonomy.u - reference);
    pt.samples = g.holonomy.samples;
  });
  return points;
}

}  // namespace spinhol
