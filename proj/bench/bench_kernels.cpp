// Copyright 2026 The spinhol Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference against the OpenMP kernels. Argument 0 selects the serial path, 1 the
// parallel one.

#include <benchmark/benchmark.h>

#include "spinhol/gates_lab.hpp"
#include "spinhol/holonomy.hpp"
#include "spinhol/spin_core.hpp"

namespace {

using namespace spinhol;

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

struct Fixture {
  KPlane plane;
  RotationCurve curve;
};

Fixture cnot_fixture(int samples) {
  const GateDemo d = gate_demo("cnot1");
  return {entry_plane(d.entry), perturb_curve(rotation_curve(d.curve.axis, d.curve.angle, samples), 1.0, 3, 1)};
}

void BM_LiftAlongCurve(benchmark::State& state) {
  const Fixture f = cnot_fixture(2001);
  for (auto _ : state) benchmark::DoNotOptimize(lift_along_curve(f.plane.spin(), f.curve, exec_of(state)));
}

void BM_Connections(benchmark::State& state) {
  const Fixture f = cnot_fixture(2001);
  const FrameCurve fc = frame_curve_from_rotations(f.plane, f.curve, 0, Execution::serial);
  for (auto _ : state) benchmark::DoNotOptimize(wz_connections(fc, exec_of(state)));
}

void BM_Holonomy(benchmark::State& state) {
  const Fixture f = cnot_fixture(2001);
  const FrameCurve fc = frame_curve_from_rotations(f.plane, f.curve, 0, Execution::serial);
  HolonomyOptions options;
  options.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(wz_holonomy(fc, options));
}

void BM_InvarianceSweep(benchmark::State& state) {
  const GateDemo d = gate_demo("not");
  const KPlane p = entry_plane(d.entry);
  const RotationCurve base = rotation_curve(d.curve.axis, d.curve.angle, 2001);
  SweepConfig config;
  config.seeds = {0, 1, 2, 3};
  config.amplitudes = {0.5, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(invariance_sweep(p, base, d.curve.expected, config, exec_of(state)));
}

BENCHMARK(BM_LiftAlongCurve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Connections)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Holonomy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvarianceSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
