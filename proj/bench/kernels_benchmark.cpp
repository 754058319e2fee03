// Copyright 2026 The ragged Authors
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

// Columnar (flat-buffer, OpenMP) kernels against their row-wise references.
//
//   ./build/bench/kernels_benchmark --benchmark_filter=InvariantMass

#include <benchmark/benchmark.h>

#include <random>

#include "ragged/kernels.hpp"

namespace {

using namespace ragged;

NodePtr random_lists(std::int64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_real_distribution<double> val(0.0, 1.0);
  std::vector<std::int64_t> offsets{0};
  std::vector<double> content;
  for (std::int64_t i = 0; i < n; ++i) {
    int k = len(rng);
    for (int j = 0; j < k; ++j) content.push_back(val(rng));
    offsets.push_back(offsets.back() + k);
  }
  return make_list_offset(std::move(offsets), make_primitive(std::move(content)));
}

void BM_InvariantMassColumnar(benchmark::State& state) {
  auto batch = gen_events(state.range(0), 42);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_mass(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_InvariantMassRowwise(benchmark::State& state) {
  auto batch = gen_events(state.range(0), 42);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_mass_rowwise(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PathLengthColumnar(benchmark::State& state) {
  auto lists = random_lists(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(path_length(*lists));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PathLengthRowwise(benchmark::State& state) {
  auto lists = random_lists(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(path_length_rowwise(lists));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_InvariantMassColumnar)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_InvariantMassRowwise)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_PathLengthColumnar)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_PathLengthRowwise)->RangeMultiplier(10)->Range(1000, 1000000);

}  // namespace

BENCHMARK_MAIN();
