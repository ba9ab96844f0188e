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


#pragma once

#include <cstdint>
#include <vector>

#include "mergelab/merge.hpp"

namespace mergelab {

struct SweepConfig {
  std::vector<int> K;
  std::vector<int> L;
  std::uint64_t seed = 0;
  int samples = 1;
};

std::uint64_t sweep_seed(std::uint64_t seed, int sample);

// Serial reference; the OpenMP kernel must reproduce it exactly.
std::vector<SimulationReport> sweep_merging_ref(const QuantumState& psi, const SweepConfig& cfg);
std::vector<SimulationReport> sweep_merging(const QuantumState& psi, const SweepConfig& cfg);

std::vector<LemmaThree> sweep_lemma3_ref(const QuantumState& psi, const SweepConfig& cfg);
std::vector<LemmaThree> sweep_lemma3(const QuantumState& psi, const SweepConfig& cfg);

// Threads used by the parallel kernels; MERGELAB_THREADS caps the OpenMP default.
int sweep_threads();

}  // namespace mergelab
