// Copyright 2026 The gottype Authors
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

#include "gottype/checker.hpp"
#include "gottype/oracle.hpp"

namespace {

using namespace gottype;

Circuit random_circuit(std::size_t n, std::size_t gates, std::uint64_t seed) {
  static const GateLibrary lib = GateLibrary::standard();
  static const char* one[] = {"H", "S", "X", "Z"};
  static const char* two[] = {"CNOT", "CZ", "SWAP"};
  std::mt19937_64 rng(seed);
  Circuit c(n);
  for (std::size_t i = 0; i < gates; ++i) {
    const std::size_t a = rng() % n;
    std::size_t b = rng() % n;
    if (b == a) b = (a + 1) % n;
    if (rng() % 2) c.add(lib.app(one[rng() % 4], {a}));
    else c.add(lib.app(two[rng() % 3], {a, b}));
  }
  return c;
}

void BM_Tableau(benchmark::State& state, Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit c = random_circuit(n, 20 * n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(infer_tableau(c, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.size() * 2 * n));
}

void BM_Unitary(benchmark::State& state, Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit c = random_circuit(n, 4 * n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::unitary_of(c, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Tableau, serial, Execution::Serial)->RangeMultiplier(4)->Range(16, 256);
BENCHMARK_CAPTURE(BM_Tableau, parallel, Execution::Parallel)->RangeMultiplier(4)->Range(16, 256);
BENCHMARK_CAPTURE(BM_Unitary, serial, Execution::Serial)->DenseRange(6, 10, 2);
BENCHMARK_CAPTURE(BM_Unitary, parallel, Execution::Parallel)->DenseRange(6, 10, 2);

BENCHMARK_MAIN();
