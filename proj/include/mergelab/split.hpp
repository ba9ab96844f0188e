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
#include <string>
#include <vector>

#include "mergelab/merge.hpp"

namespace mergelab {

struct SplitParties {
  std::vector<std::string> T;
  std::vector<std::string> Tbar;
  std::string A;
  std::string B;
  std::vector<std::string> reference;
};
SplitParties split_parties(const SystemLayout& layout, const std::vector<std::string>& T);

struct SplitReport {
  std::uint64_t seed = 0;
  double q1 = 0;
  double q2 = 0;
  double delta1 = 0;
  double delta2 = 0;
  double end_error = 0;
  double bound = 0;  // 2 sqrt(q1) + 2 sqrt(q2)
  bool bound_holds = true;
};

struct SplitCosts {
  std::vector<int> K, L;  // helpers in T
  std::vector<int> M, N;  // helpers in Tbar
};

SplitReport split_transfer_sim(const QuantumState& psi, const std::vector<std::string>& T,
                               const SplitCosts& costs, std::uint64_t seed);

std::pair<double, double> split_delta_bounds(const QuantumState& psi, const SplitParties& parties,
                                             const SplitCosts& costs);

std::pair<CostAssignment, CostAssignment> prop8_split_costs(const QuantumState& psi,
                                                            const std::vector<std::string>& T,
                                                            double eps1, double eps2);

}  // namespace mergelab
