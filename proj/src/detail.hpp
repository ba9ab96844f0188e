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

#include <string>
#include <vector>

#include "mergelab/state.hpp"

namespace mergelab::detail {

// Flat old index for each flat new index, where new axis k is old axis perm[k].
std::vector<long> index_map(const std::vector<int>& dims, const std::vector<int>& perm);

// Rows of the factor reordered as (layout \ cond) then cond; rho_AR = F F^+.
struct SplitFactor {
  Mat F;
  long dA = 1;
  long dR = 1;
  std::vector<std::string> A;
  std::vector<std::string> R;
};
SplitFactor split_factor(const FactoredState& f, const std::vector<std::string>& cond);

FactoredState factor_of(const QuantumState& s);

// Largest eigenvalue of G G^+.
double top_gram(const Mat& G);

}  // namespace mergelab::detail
