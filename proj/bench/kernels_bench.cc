/*
 * Copyright 2026 The QCSA Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "qcsa/kernels.h"
#include "qcsa/random.h"
#include "qcsa/scheme.h"

namespace qcsa {
namespace {

constexpr uint32_t kPrime = 2147483647;

std::vector<uint32_t> RandomData(std::size_t count, uint64_t seed) {
  Rng rng(seed);
  std::vector<uint32_t> out(count);
  for (auto& v : out) v = static_cast<uint32_t>(rng.Below(kPrime));
  return out;
}

template <auto Kernel>
void BM_MatMul(benchmark::State& state) {
  const std::size_t n = state.range(0);
  auto a = RandomData(n * n, 1), b = RandomData(n * n, 2);
  std::vector<uint32_t> c(n * n);
  for (auto _ : state) {
    Kernel(a, b, c, n, n, n, kPrime);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n * n);
}

template <auto Kernel>
void BM_Rref(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto source = RandomData(n * 2 * n, 3);
  std::vector<uint32_t> work;
  for (auto _ : state) {
    state.PauseTiming();
    work = source;
    state.ResumeTiming();
    benchmark::DoNotOptimize(Kernel(work, n, 2 * n, n, kPrime));
  }
}

template <auto Runner>
void BM_Trials(benchmark::State& state) {
  PrimeField f(101);
  QcsaConstruction c = ConstructQcsa(QcsaParams::Default(f, 12, 6));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Runner(c, 1, state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_MatMul<kernels::serial::MatMul>)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_MatMul<kernels::parallel::MatMul>)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_Rref<kernels::serial::Rref>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Rref<kernels::parallel::Rref>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(BM_Trials<serial::RunTrials>)->Arg(1000);
BENCHMARK(BM_Trials<parallel::RunTrials>)->Arg(1000);

}  // namespace
}  // namespace qcsa

BENCHMARK_MAIN();
