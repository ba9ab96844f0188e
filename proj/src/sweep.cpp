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


#include <cstdlib>
#include <exception>
#include <string>

#include <omp.h>

#include "mergelab/random.hpp"
#include "mergelab/sweep.hpp"

namespace mergelab {
namespace {

template <typename Result, typename Fn>
std::vector<Result> parallel_map(int n, Fn fn) {
  std::vector<Result> out(n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(sweep_threads())
  for (int i = 0; i < n; ++i) {
    try {
      out[i] = fn(i);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

std::uint64_t sweep_seed(std::uint64_t seed, int sample) {
  return derive_seed(seed, static_cast<std::uint64_t>(sample));
}

int sweep_threads() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("MERGELAB_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap > 0 && cap < n) n = cap;
    } catch (...) {
    }
  }
  return n < 1 ? 1 : n;
}

std::vector<SimulationReport> sweep_merging_ref(const QuantumState& psi, const SweepConfig& cfg) {
  std::vector<SimulationReport> out;
  for (int i = 0; i < cfg.samples; ++i) out.push_back(run_merging(psi, cfg.K, cfg.L, sweep_seed(cfg.seed, i)));
  return out;
}

std::vector<SimulationReport> sweep_merging(const QuantumState& psi, const SweepConfig& cfg) {
  return parallel_map<SimulationReport>(
      cfg.samples, [&](int i) { return run_merging(psi, cfg.K, cfg.L, sweep_seed(cfg.seed, i)); });
}

std::vector<LemmaThree> sweep_lemma3_ref(const QuantumState& psi, const SweepConfig& cfg) {
  std::vector<LemmaThree> out;
  for (int i = 0; i < cfg.samples; ++i)
    out.push_back(lemma3_residual_and_bound(psi, cfg.L, sweep_seed(cfg.seed, i), cfg.K));
  return out;
}

std::vector<LemmaThree> sweep_lemma3(const QuantumState& psi, const SweepConfig& cfg) {
  return parallel_map<LemmaThree>(
      cfg.samples, [&](int i) { return lemma3_residual_and_bound(psi, cfg.L, sweep_seed(cfg.seed, i), cfg.K); });
}

}  // namespace mergelab
