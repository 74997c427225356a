// Copyright 2026 The liegeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liegeo/catalog.hpp"
#include "liegeo/hypersurface.hpp"
#include "liegeo/structure.hpp"
#include "liegeo/theorem_lab.hpp"

#include <benchmark/benchmark.h>

using namespace liegeo;

namespace {

void BM_ExactSectionalCurvature(benchmark::State& state) {
  const MetricLieAlgebra alg = catalog::oscillator(static_cast<std::size_t>(state.range(0)));
  ExactVector x(alg.dim(), ExactScalar(0)), y(alg.dim(), ExactScalar(0));
  x.back() = ExactScalar(Rational(3, 2));
  x[1] = ExactScalar(1);
  y[2] = ExactScalar(1);
  for (auto _ : state) benchmark::DoNotOptimize(sectional_curvature<ExactScalar>(alg, x, y));
}
BENCHMARK(BM_ExactSectionalCurvature)->Arg(1)->Arg(2)->Arg(3);

void BM_FloatSectionalCurvature(benchmark::State& state) {
  const MetricLieAlgebra alg = catalog::oscillator(static_cast<std::size_t>(state.range(0)));
  FloatVector x(alg.dim(), 0.0), y(alg.dim(), 0.0);
  x.back() = 1.5;
  x[1] = 1;
  y[2] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sectional_curvature<double>(alg, x, y));
}
BENCHMARK(BM_FloatSectionalCurvature)->Arg(1)->Arg(3);

void BM_ExactValidate(benchmark::State& state) {
  const MetricLieAlgebra alg = catalog::oscillator(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate(alg, true));
}
BENCHMARK(BM_ExactValidate)->Arg(1)->Arg(2)->Arg(3);

void BM_PointData(benchmark::State& state) {
  const ImmersionChart chart =
      catalog::catalog_immersion(state.range(0) == 0 ? "sphere:r=1,ambient=euclidean:n=3"
                                                     : "subgroup_slice:ambient=product:factor=su2");
  const Vec u = chart.domain().center();
  for (auto _ : state) benchmark::DoNotOptimize(point_data(chart, u, 1e-3));
}
BENCHMARK(BM_PointData)->Arg(0)->Arg(1);

// All three differencing identities at one node; this is the per-node cost of a grid scan.
void BM_PointEvaluatorLemmas(benchmark::State& state) {
  const ImmersionChart chart = catalog::catalog_immersion(
      state.range(0) == 0 ? "hyperbolic_graph:r=1,ambient=minkowski:n=3" : "su2_in_u2");
  const Vec u = chart.domain().center();
  for (auto _ : state) {
    PointEvaluator ev(chart, u, 1e-3);
    benchmark::DoNotOptimize(ev.gradient());
    benchmark::DoNotOptimize(ev.gradnorm());
    benchmark::DoNotOptimize(ev.laplacian());
  }
}
BENCHMARK(BM_PointEvaluatorLemmas)->Arg(0)->Arg(1);

void BM_LorentzPlaneSup(benchmark::State& state) {
  const MetricLieAlgebra alg = catalog::oscillator(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lorentz_plane_sup(alg, n, 42));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_LorentzPlaneSup)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
