// Copyright 2026 The mcso Authors
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

#include <benchmark/benchmark.h>

#include <numbers>

#include "mcso/mcso.hpp"

namespace {

mcso::SuperpositionParams params(int m) {
  mcso::SuperpositionParams p;
  p.m = m;
  p.theta = std::numbers::pi / 3;
  p.alpha0 = {1.0, 1.0};
  return p;
}

void BM_Hermite(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(mcso::hermite(n, {0.7, -1.2}));
}
BENCHMARK(BM_Hermite)->Arg(4)->Arg(16)->Arg(64);

void BM_Normalization(benchmark::State& st) {
  const auto p = params(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mcso::normalization(p));
}
BENCHMARK(BM_Normalization)->Arg(1)->Arg(4)->Arg(16);

void BM_MandelQ(benchmark::State& st) {
  const auto p = params(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mcso::mandel_q(p));
}
BENCHMARK(BM_MandelQ)->Arg(1)->Arg(4)->Arg(8);

void BM_Squeezing(benchmark::State& st) {
  const auto p = params(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mcso::squeezing(p));
}
BENCHMARK(BM_Squeezing)->Arg(1)->Arg(4)->Arg(8);

void BM_PhotocountDistribution(benchmark::State& st) {
  const auto p = params(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mcso::photocount_distribution(p, 0.9, 20));
}
BENCHMARK(BM_PhotocountDistribution)->Arg(1)->Arg(4);

void BM_WignerPoint(benchmark::State& st) {
  const mcso::WignerEvaluator w(params(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(w({0.3, -0.4}));
}
BENCHMARK(BM_WignerPoint)->Arg(0)->Arg(3)->Arg(10);

void BM_EvolvedWignerPoint(benchmark::State& st) {
  const mcso::EvolvedWignerEvaluator w(params(static_cast<int>(st.range(0))), {0.05, 0.2});
  for (auto _ : st) benchmark::DoNotOptimize(w({0.3, -0.4}));
}
BENCHMARK(BM_EvolvedWignerPoint)->Arg(1)->Arg(3);

void BM_WignerGrid(benchmark::State& st) {
  const auto p = params(2);
  const mcso::GridSpec g{-4.0, 4.0, -4.0, 4.0, 101, 101};
  for (auto _ : st) benchmark::DoNotOptimize(mcso::wigner_grid(p, g, 1));
}
BENCHMARK(BM_WignerGrid)->Unit(benchmark::kMillisecond);

void BM_NegativeVolume(benchmark::State& st) {
  auto p = params(1);
  p.alpha0 = 0.1;
  mcso::QuadratureSettings q;
  q.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(mcso::negative_volume(p, q));
}
BENCHMARK(BM_NegativeVolume)->Unit(benchmark::kMillisecond);

void BM_OracleBuildState(benchmark::State& st) {
  const auto p = params(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mcso::build_state(p));
}
BENCHMARK(BM_OracleBuildState)->Arg(1)->Arg(4);

void BM_OracleWigner(benchmark::State& st) {
  const auto v = mcso::build_state(params(1), 64);
  for (auto _ : st) benchmark::DoNotOptimize(mcso::oracle_wigner(v, {0.5, 0.5}));
}
BENCHMARK(BM_OracleWigner);

void BM_EvolveMaster(benchmark::State& st) {
  const auto rho = mcso::FockDensity::from_pure(mcso::build_state(params(1), 32));
  const mcso::ThermalChannel ch{0.05, 0.2};
  const int steps = mcso::master_steps(ch, rho.cutoff);
  for (auto _ : st) benchmark::DoNotOptimize(mcso::evolve_master(rho, ch, steps));
}
BENCHMARK(BM_EvolveMaster)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
