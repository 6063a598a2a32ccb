// Copyright 2026 The levelone Authors
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

#include <string>

#include "levelone/app/examples.hpp"
#include "levelone/app/input.hpp"
#include "levelone/borel/connection.hpp"
#include "levelone/formal/homological.hpp"
#include "levelone/stokes/laplace.hpp"

namespace {

using namespace levelone;

constexpr int kOrder = 40;

LevelOneSystem example(const std::string& name) {
  for (const BundledExample& e : bundled_examples())
    if (e.name == name) return parse_input(e.json).system;
  throw std::runtime_error("missing example " + name);
}

std::vector<Complex> sample_points() {
  std::vector<Complex> xs;
  for (double r : {0.05, 0.08, 0.11, 0.14}) xs.emplace_back(Real(r));
  return xs;
}

void BM_SeriesSerial(benchmark::State& state) {
  PrecisionScope scope(256);
  LevelOneSystem sys = example("three_block.json");
  for (auto _ : state) benchmark::DoNotOptimize(solve_homological_serial(sys, kOrder));
}

void BM_SeriesParallel(benchmark::State& state) {
  PrecisionScope scope(256);
  LevelOneSystem sys = example("three_block.json");
  for (auto _ : state) benchmark::DoNotOptimize(solve_homological(sys, kOrder, Columns::all));
}

void BM_ConnectionSerial(benchmark::State& state) {
  PrecisionScope scope(256);
  LevelOneSystem sys = example("three_block.json");
  for (auto _ : state) benchmark::DoNotOptimize(connection_matrix_serial(sys, Real(0), kOrder));
}

void BM_ConnectionParallel(benchmark::State& state) {
  PrecisionScope scope(256);
  LevelOneSystem sys = example("three_block.json");
  for (auto _ : state) benchmark::DoNotOptimize(connection_matrix(sys, Real(0), kOrder));
}

void BM_LaplaceSumsSerial(benchmark::State& state) {
  PrecisionScope scope(256);
  LevelOneSystem sys = example("resonant4x4.json");
  const std::vector<Complex> xs = sample_points();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::laplace_sums_serial(sys, Real(0), xs, kOrder));
}

void BM_LaplaceSumsParallel(benchmark::State& state) {
  PrecisionScope scope(256);
  LevelOneSystem sys = example("resonant4x4.json");
  const std::vector<Complex> xs = sample_points();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::laplace_sums_parallel(sys, Real(0), xs, kOrder));
}

}  // namespace

BENCHMARK(BM_SeriesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConnectionSerial)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_ConnectionParallel)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_LaplaceSumsSerial)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_LaplaceSumsParallel)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
