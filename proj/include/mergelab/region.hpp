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
#include <utility>
#include <vector>

#include <json.hpp>

#include "mergelab/state.hpp"

namespace mergelab {

enum class Provenance { thm1, compression, thm4, prop5_point, thm5_T_side, thm5_Tbar_side, prop8 };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct Inequality {
  unsigned subset = 0;  // bitmask over senders; sum_{i in subset} x_i >= rhs
  double rhs = 0;
};

struct CostRegion {
  std::vector<std::string> senders;
  std::vector<Inequality> inequalities;
  Provenance provenance = Provenance::thm1;
};

struct Membership {
  bool inside = true;
  std::vector<unsigned> violated;
  std::vector<double> slack;  // per inequality
};

CostRegion build_merge_region(const QuantumState& psi, const std::vector<std::string>& senders,
                              const std::string& receiver);
Membership contains(const CostRegion& region, const std::vector<double>& x, double tol = 1e-9);

std::pair<std::vector<double>, std::vector<double>> corner_points_m2(const QuantumState& psi);

struct SplitRegion {
  CostRegion T_side;
  CostRegion Tbar_side;
};
SplitRegion build_split_region(const QuantumState& psi, const std::vector<std::string>& T,
                               const std::string& A, const std::string& B);

double assisted_rate(const QuantumState& psi, const std::string& A, const std::string& B,
                     const std::vector<std::string>& helpers);

struct Prop5Point {
  std::vector<int> permutation;
  std::vector<double> costs;  // integral, per sender in layout order
  bool finite = true;
  bool dominance_closed = true;
};

struct OneShotRegions {
  CostRegion thm4;
  std::vector<Prop5Point> prop5_points;
};
OneShotRegions one_shot_regions(const QuantumState& psi, double epsilon);

nlohmann::json region_to_json(const CostRegion& r);
CostRegion region_from_json(const nlohmann::json& j);
std::string prop5_csv(const std::vector<std::string>& senders, const std::vector<Prop5Point>& pts);

}  // namespace mergelab
