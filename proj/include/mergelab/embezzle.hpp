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

#include <vector>

#include "mergelab/state.hpp"

namespace mergelab {

enum class Family { orthonormal, common_tilt };

struct EmbezzleParams {
  int d = 2;
  double alpha = 0;
  Family family = Family::common_tilt;
  double epsilon = 0.1;
  double delta = 0;  // smoothing parameter; 0 means epsilon^2 / 256
};

double harmonic(int d);
double smoothing_delta(const EmbezzleParams& p);
std::vector<double> embezzle_spectrum(int d);

// Gram matrix <psi_i|psi_j> of the C2 family.
Mat embezzle_gram(const EmbezzleParams& p);
QuantumState build_embezzling(const EmbezzleParams& p);

struct Gershgorin {
  double lambda_bound = 0;  // 2 alpha d + 1
  double hmin_upper = 0;    // log(2 alpha d + 1)
  double hmin_exact = 0;    // -H_min(psi^{C1R}|psi^R)
  double eig_margin = 0;    // lambda_bound - lambda_exact
};
Gershgorin gershgorin_bound(const EmbezzleParams& p);

struct SingletFraction {
  double aligned_overlap = 0;
  double lower_5_over_logd = 0;
  double hmin_lower = 0;  // log d - log log d + 2
  bool claim_holds = false;
};
SingletFraction singlet_fraction(const EmbezzleParams& p);
// Smallest d0 <= d_max with aligned_overlap >= 5/log d for every d in [d0, d_max].
int singlet_threshold(int d_max);

struct SmoothingEstimate {
  double delta = 0;
  double k_threshold = 0;
  int k = 0;
  double bound_bits = 0;
  double tail = 0;  // 1 - H_{k}/H_d
  bool tail_condition_fails = false;
};
SmoothingEstimate smoothing_estimate(const EmbezzleParams& p);

struct CostComparison {
  double e1_min = 0;
  double e2_min = 0;
  double thm4_sum = 0;
  double prop5_lower = 0;
  double prop5_smoothed = 0;
  double smoothing_savings = 0;
  double difference = 0;
  bool thm4_below = false;
};
CostComparison cost_comparison(const EmbezzleParams& p);

struct EmbezzleRow {
  int d = 0;
  double alpha = 0;
  double eps = 0;
  double hmin_exact = 0;
  double gersh_bound = 0;
  double singlet = 0;
  double hmax = 0;
  double smooth_bound = 0;
  double thm4_sum = 0;
  double prop5_lower = 0;
};
EmbezzleRow embezzle_row(const EmbezzleParams& p);

double embezzle_hmax(int d);

}  // namespace mergelab
