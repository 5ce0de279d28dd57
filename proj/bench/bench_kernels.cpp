// Copyright 2026 The dnasynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial against OpenMP execution of the two data-parallel kernels: the
// layered count-table fill and the brute-force census.

#include "dnasynth/counting.hpp"
#include "dnasynth/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using dnasynth::Execution;

template <Execution policy>
void
BM_BalancedFill(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    dnasynth::BalancedCountTable table(n, 3, policy);
    benchmark::DoNotOptimize(table.total_with_gc(n, n / 2, 4LL * n));
  }
}

template <Execution policy>
void
BM_RllFill(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    dnasynth::RllCountTable table(n, 3, policy);
    benchmark::DoNotOptimize(table.total(n, 4LL * n));
  }
}

template <Execution policy>
void
BM_Census(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    dnasynth::oracle::Census census(n, policy);
    benchmark::DoNotOptimize(census.total());
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{ 1 } << (2 * n)));
}

} // namespace

BENCHMARK(BM_RllFill<Execution::serial>)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RllFill<Execution::parallel>)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BalancedFill<Execution::serial>)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BalancedFill<Execution::parallel>)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census<Execution::serial>)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census<Execution::parallel>)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
