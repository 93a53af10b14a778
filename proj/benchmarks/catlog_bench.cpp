// Copyright 2026 The catlog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "catlog/catalan.hpp"
#include "catlog/combinatorics.hpp"
#include "catlog/identities.hpp"
#include "catlog/power_series.hpp"

using namespace catlog;

static void BM_StirlingTriangle(benchmark::State& state) {
  const auto nmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(StirlingTriangle(nmax));
}
BENCHMARK(BM_StirlingTriangle)->Arg(100)->Arg(400);

static void BM_HarmonicTable(benchmark::State& state) {
  const auto nmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(HarmonicTable(nmax, 4));
}
BENCHMARK(BM_HarmonicTable)->Arg(100)->Arg(1000);

static void BM_CentralBinomial(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(binomial(2 * n, n));
}
BENCHMARK(BM_CentralBinomial)->Arg(50)->Arg(500);

static void BM_SeriesLogCatalan(benchmark::State& state) {
  const auto c = catalan_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(log(c));
}
BENCHMARK(BM_SeriesLogCatalan)->Arg(60)->Arg(200);

static void BM_LogPowDirect(benchmark::State& state) {
  const ExpansionRequest req{static_cast<unsigned>(state.range(0)), LambdaParam(3), 60};
  for (auto _ : state) benchmark::DoNotOptimize(log_pow_direct(req));
}
BENCHMARK(BM_LogPowDirect)->Arg(2)->Arg(5);

static void BM_LogPowStirling(benchmark::State& state) {
  const StirlingTriangle triangle(60);
  const ExpansionRequest req{static_cast<unsigned>(state.range(0)), LambdaParam(3), 60};
  for (auto _ : state) benchmark::DoNotOptimize(log_pow_stirling(req, triangle));
}
BENCHMARK(BM_LogPowStirling)->Arg(2)->Arg(5);

static void BM_LogPowHarmonic(benchmark::State& state) {
  const HarmonicTable harmonic(40, 4);
  const ExpansionRequest req{static_cast<unsigned>(state.range(0)), LambdaParam(2), 40};
  for (auto _ : state) benchmark::DoNotOptimize(log_pow_harmonic(req, harmonic));
}
BENCHMARK(BM_LogPowHarmonic)->Arg(2)->Arg(5);

static void BM_AlternatingIdentity(benchmark::State& state) {
  const auto nmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alternating_identity_check(nmax));
}
BENCHMARK(BM_AlternatingIdentity)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
  VerifyConfig config;
  config.order = 40;
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(config));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
