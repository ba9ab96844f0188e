// Copyright 2026 The mergelab Authors
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

#include "mergelab/random.hpp"
#include "mergelab/sweep.hpp"

using namespace mergelab;

namespace {

QuantumState bench_state() {
  SystemLayout lay({{"C1", 4, Role::sender}, {"C2", 4, Role::sender}, {"R", 4, Role::reference}});
  return random_pure_state(lay, 2024);
}

SweepConfig bench_config(int samples) {
  SweepConfig cfg;
  cfg.K = {1, 1};
  cfg.L = {2, 2};
  cfg.seed = 7;
  cfg.samples = samples;
  return cfg;
}

void BM_MergingSerial(benchmark::State& state) {
  QuantumState psi = bench_state();
  SweepConfig cfg = bench_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_merging_ref(psi, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.samples);
}

void BM_MergingParallel(benchmark::State& state) {
  QuantumState psi = bench_state();
  SweepConfig cfg = bench_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_merging(psi, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.samples);
  state.counters["threads"] = sweep_threads();
}

void BM_Lemma3Serial(benchmark::State& state) {
  QuantumState psi = bench_state();
  SweepConfig cfg = bench_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_lemma3_ref(psi, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.samples);
}

void BM_Lemma3Parallel(benchmark::State& state) {
  QuantumState psi = bench_state();
  SweepConfig cfg = bench_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_lemma3(psi, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.samples);
  state.counters["threads"] = sweep_threads();
}

}  // namespace

BENCHMARK(BM_MergingSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MergingParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lemma3Serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lemma3Parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
