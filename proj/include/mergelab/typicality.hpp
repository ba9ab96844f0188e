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

#include "mergelab/linalg.hpp"

namespace mergelab {

struct TypicalityData {
  int n = 0;
  double delta = 0;
  int d = 0;
  RVec probabilities;       // eigenvalues of the single-copy state
  Mat basis;                // eigenvectors (columns)
  std::vector<char> typical;  // per eigenbasis string, row-major
  long rank = 0;
  double mass = 0;
  double entropy = 0;

  Mat projector() const;  // dense, d^n x d^n
};

TypicalityData typicality(const Mat& rho, int n, double delta);

// Minimum eigenvalue of (x)Pi_k - sum_k Pi_k + (q-1) I for projectors on distinct systems.
double typicality_operator_inequality(const std::vector<Mat>& projectors);
double typicality_operator_inequality_dense(const std::vector<Mat>& projectors);

}  // namespace mergelab
