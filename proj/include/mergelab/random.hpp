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
#include <random>

#include "mergelab/linalg.hpp"
#include "mergelab/state.hpp"

namespace mergelab {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double normal() { return normal_(eng_); }
  double uniform() { return uniform_(eng_); }
  cplx complex_normal();
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

Mat ginibre(int rows, int cols, Rng& rng);
Mat haar_unitary(int dim, std::uint64_t seed);
Mat haar_unitary(int dim, Rng& rng);

Vec random_unit_vector(long dim, Rng& rng);
Mat random_density(int dim, int rank, Rng& rng);
QuantumState random_pure_state(const SystemLayout& layout, std::uint64_t seed);

}  // namespace mergelab
