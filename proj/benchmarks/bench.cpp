// Copyright 2026 The qc-bound Authors
// SPDX-License-Identifier: Apache-2.0

#include <numbers>

#include <benchmark/benchmark.h>

#include "qcbound/complexity.hpp"
#include "qcbound/geodesic_path.hpp"
#include "qcbound/lie_algebra.hpp"
#include "qcbound/matrix_oracle.hpp"

namespace {

using namespace qcbound;

void BM_RhsSp4(benchmark::State& state) {
  const auto alg = builtin("sp4_T10");
  const auto g = PenaltyMatrix::identity(10);
  Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(10, -1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(rhs(alg, g, v));
}
BENCHMARK(BM_RhsSp4);

void BM_SolveNumericCoupled(benchmark::State& state) {
  const auto alg = builtin("coupled_M4");
  const auto g = PenaltyMatrix::diagonal({1, 1, 10, 10});
  Eigen::VectorXd v0(4);
  v0 << 1.0, 2.0, 1.0, 0.5;
  const double h = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_numeric(alg, g, v0, h));
}
BENCHMARK(BM_SolveNumericCoupled)->Arg(1000)->Arg(10000);

void BM_BoundHoLinear(benchmark::State& state) {
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound(target::HoLinear{1.0, 0.3, t}));
    t += 1e-3;
  }
}
BENCHMARK(BM_BoundHoLinear);

void BM_BoundCoupled(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound(target::CoupledOscillators{2, 1, 3, 0.7, 1, 10}));
  }
}
BENCHMARK(BM_BoundCoupled);

void BM_AnharmonicElliptic(benchmark::State& state) {
  Eigen::VectorXd v0(5);
  v0 << 2.0, 0.01, -0.02, 0.015, 0.005;
  for (auto _ : state) benchmark::DoNotOptimize(anharmonic_length_elliptic(v0, 1.0, 100.0));
}
BENCHMARK(BM_AnharmonicElliptic);

void BM_AnharmonicQuadrature(benchmark::State& state) {
  Eigen::VectorXd v0(5);
  v0 << 2.0, 0.01, -0.02, 0.015, 0.005;
  for (auto _ : state) benchmark::DoNotOptimize(anharmonic_length_quadrature(v0, 1.0, 100.0));
}
BENCHMARK(BM_AnharmonicQuadrature);

void BM_PathOrderedFock(benchmark::State& state) {
  const auto rep = fock_rep_sp2_j(static_cast<int>(state.range(0)));
  Eigen::VectorXd v0(3);
  v0 << 0.1, 0.0, 0.2;
  const auto sol = solve_closed_form(ClosedFormFamily::sp2_j(), v0);
  for (auto _ : state) benchmark::DoNotOptimize(path_ordered_exponential(rep, sol, 4000));
}
BENCHMARK(BM_PathOrderedFock)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
