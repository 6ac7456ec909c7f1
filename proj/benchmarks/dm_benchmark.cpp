// Copyright 2026 The Authors.
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

#include <random>
#include <vector>

#include "dm/dm.hpp"

namespace {

void BM_ExchangeKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dm::FamilyMask last = (dm::FamilyMask{1} << (1 << n)) - 1;
  dm::FamilyMask family = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::family_satisfies_exchange(n, family));
    family = family == last ? 1 : family + 1;
  }
}
BENCHMARK(BM_ExchangeKernel)->Arg(3)->Arg(4);

void BM_CountDeltaMatroids(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::count_delta_matroids(n));
  }
}
BENCHMARK(BM_CountDeltaMatroids)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

std::vector<dm::DeltaMatroid> samples(int n, int count) {
  std::mt19937_64 rng(42);
  std::vector<dm::DeltaMatroid> out;
  for (int i = 0; i < count; ++i)
    out.push_back(dm::sample_delta_matroid(rng, n));
  return out;
}

void BM_MinWidthTwist(benchmark::State& state) {
  const auto pool = samples(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::min_width_twist(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_MinWidthTwist)->Arg(5)->Arg(6);

void BM_MinWidthTwistDirect(benchmark::State& state) {
  const auto pool = samples(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dm::min_width_twist_direct(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_MinWidthTwistDirect)->Arg(5)->Arg(6);

void BM_Certify(benchmark::State& state) {
  const auto pool = samples(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::certify(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_Certify)->Arg(5)->Arg(6);

void BM_IsObstructed(benchmark::State& state) {
  const auto pool = samples(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::is_obstructed(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_IsObstructed)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
