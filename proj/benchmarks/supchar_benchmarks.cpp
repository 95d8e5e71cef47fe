// Copyright 2026 The supchar Authors
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

// Microbenchmarks for the hot paths: field arithmetic, orbit census,
// closed-form tables and the brute-force pipeline.

#include <benchmark/benchmark.h>

#include "supchar/action.hpp"
#include "supchar/galois_field.hpp"
#include "supchar/triangular.hpp"

namespace {

using namespace supchar;

void BM_FieldMul(benchmark::State& state) {
  const auto spec = field_make(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  const GaloisField& f = *spec;
  std::uint32_t a = 1;
  for (auto _ : state) {
    FieldElement x = FieldElement{1 + a % (f.size() - 1)};
    for (std::uint32_t b = 1; b < f.size(); ++b) x = f.mul(x, FieldElement{b});
    benchmark::DoNotOptimize(x);
    ++a;
  }
  state.SetItemsProcessed(state.iterations() * (f.size() - 1));
}
BENCHMARK(BM_FieldMul)->Args({2, 8})->Args({3, 5})->Args({251, 1});

void BM_OrbitCensus(benchmark::State& state) {
  const auto alg = make_triangular(static_cast<std::uint32_t>(state.range(0)),
                                   field_make(static_cast<std::uint32_t>(state.range(1)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(orbit_census(alg, Space::kDual));
}
BENCHMARK(BM_OrbitCensus)->Args({3, 3})->Args({4, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_ClosedTable(benchmark::State& state) {
  const auto field = field_make(static_cast<std::uint32_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_table(static_cast<std::uint32_t>(state.range(0)), field));
}
BENCHMARK(BM_ClosedTable)->Args({3, 3})->Args({4, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const auto field = field_make(static_cast<std::uint32_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(static_cast<std::uint32_t>(state.range(0)), field));
}
BENCHMARK(BM_BruteForce)->Args({2, 3})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
