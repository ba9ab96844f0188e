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

namespace mergelab {

struct Closeness {
  double fidelity = 0;
  double trace_distance = 0;
  double purified_distance = 0;
};

double fidelity(const Mat& rho, const Mat& sigma);
double generalized_fidelity(const Mat& rho, const Mat& sigma);
double purified_distance(const Mat& rho, const Mat& sigma);
Closeness closeness(const Mat& rho, const Mat& sigma);
Closeness closeness(const QuantumState& rho, const QuantumState& sigma);

struct PartialIsometry {
  std::string input_label;
  std::string output_label;
  Mat matrix;
  int rank = 0;

  // Orthonormal rows (rows <= cols) or orthonormal columns otherwise.
  bool is_valid(double tol = 1e-10) const;
};

// V maximizing |<phi|(I (x) V)|psi>| given coefficient matrices with a shared row system.
Mat uhlmann_from_coefficients(const Mat& psi_coeff, const Mat& phi_coeff);

PartialIsometry uhlmann_isometry(const QuantumState& psi, const QuantumState& phi,
                                 const std::vector<std::string>& movable);

// (I (x) V) psi with V from uhlmann_isometry; the movable systems of psi are replaced
// by those of phi, in phi's layout order.
QuantumState apply_uhlmann(const QuantumState& psi, const QuantumState& phi,
                           const std::vector<std::string>& movable, const Mat& V);

}  // namespace mergelab
