// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

// The OpenMP kernels must reproduce their serial references bit for bit.

#include <doctest.h>

#include <omp.h>

#include <stdexcept>

#include "spinhol/execution.hpp"
#include "spinhol/gates_lab.hpp"
#include "spinhol/holonomy.hpp"
#include "spinhol/spin_core.hpp"
#include "support.hpp"

using namespace spinhol;

namespace {

/// Forces several threads even on a single-core machine.
struct Threads {
  int saved = omp_get_max_threads();
  explicit Threads(int n) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_CASE("for_each_index visits every index and rethrows") {
  const Threads t(4);
  std::vector<int> hits(100, 0);
  for_each_index(hits.size(), Execution::parallel, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(for_each_index(10, Execution::parallel,
                                 [](std::size_t i) {
                                   if (i == 7) throw std::runtime_error("seven");
                                 }),
                  std::runtime_error);
}

TEST_CASE("lift, frames, connections and holonomy: serial equals parallel") {
  const Threads t(4);
  const GateDemo demo = gate_demo("cnot1");
  const KPlane p = entry_plane(demo.entry);
  const RotationCurve curve = perturb_curve(rotation_curve(demo.curve.axis, demo.curve.angle, 301), 1.0, 3, 9);

  const std::vector<Matrix> ds = lift_along_curve(p.spin(), curve, Execution::serial);
  const std::vector<Matrix> dp = lift_along_curve(p.spin(), curve, Execution::parallel);
  REQUIRE(ds.size() == dp.size());
  for (std::size_t i = 0; i < ds.size(); ++i) CHECK(ds[i] == dp[i]);

  const FrameCurve fs = frame_curve_from_rotations(p, curve, 0, Execution::serial);
  const FrameCurve fp = frame_curve_from_rotations(p, curve, 0, Execution::parallel);
  for (std::size_t i = 0; i < fs.size(); ++i) CHECK(fs.frame(i) == fp.frame(i));

  const std::vector<ConnectionSample> cs = wz_connections(fs, Execution::serial);
  const std::vector<ConnectionSample> cp = wz_connections(fs, Execution::parallel);
  for (std::size_t i = 0; i < cs.size(); ++i) CHECK(cs[i].a == cp[i].a);

  for (OrderingScheme scheme : {OrderingScheme::midpoint, OrderingScheme::high_order}) {
    CHECK(path_ordered_exponential(fs, scheme, Execution::serial) ==
          path_ordered_exponential(fs, scheme, Execution::parallel));
  }
  HolonomyOptions serial, parallel;
  serial.exec = Execution::serial;
  CHECK(wz_holonomy(fs, serial).u == wz_holonomy(fs, parallel).u);
}

TEST_CASE("invariance sweep: serial equals parallel") {
  const Threads t(4);
  const GateDemo demo = gate_demo("not");
  const KPlane p = entry_plane(demo.entry);
  const RotationCurve base = rotation_curve(demo.curve.axis, demo.curve.angle, 201);
  SweepConfig config;
  config.seeds = {0, 1, 2};
  config.amplitudes = {0.5, 2.0};
  config.gate.samples = 201;
  const std::vector<SweepPoint> a = invariance_sweep(p, base, demo.curve.expected, config, Execution::serial);
  const std::vector<SweepPoint> b = invariance_sweep(p, base, demo.curve.expected, config, Execution::parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].seed == b[i].seed);
    CHECK(a[i].amplitude == b[i].amplitude);
    CHECK(a[i].deviation == b[i].deviation);
    CHECK(a[i].samples == b[i].samples);
  }
}
