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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mergelab/state.hpp"

namespace mergelab {

enum class Quantity { vonNeumann, condVN, hMinRel, hMinCond, h2Rel, hMax, hMaxCond, smoothHMax };
enum class SolverStatus { closed_form, converged, certificate_gap };

std::string to_string(Quantity q);
std::string to_string(SolverStatus s);

struct EntropyReport {
  Quantity quantity = Quantity::vonNeumann;
  double value = 0;
  SolverStatus status = SolverStatus::closed_form;
  double gap = 0;                  // certificate gap in bits
  std::optional<Mat> sigma;        // optimizing conditioning state
  std::optional<double> lambda;    // 2^(-value) for min-entropies
  std::optional<int> k;            // truncation index
  std::optional<double> epsilon;   // smoothing parameter
  int iterations = 0;
};

nlohmann::json report_to_json(const EntropyReport& r);

double von_neumann_spectrum(const RVec& spectrum);
double von_neumann(const QuantumState& rho);
double entropy_of(const QuantumState& s, const std::vector<std::string>& keep);
double cond_von_neumann(const QuantumState& s, const std::vector<std::string>& part,
                        const std::vector<std::string>& cond);

// Rows of F are indexed a * dR + r.
EntropyReport h_min_relative(const Mat& F, int dA, int dR, const Mat& sigma);
EntropyReport h_min_relative(const QuantumState& rho_AR, const QuantumState& sigma_R);
EntropyReport h_min_relative(const FactoredState& rho_AR, const QuantumState& sigma_R);

struct SolverOptions {
  double target_gap_bits = 1e-9;
  int max_newton = 200;
  long max_block_dim = 1024;
};

EntropyReport h_min_conditional(const Mat& F, int dA, int dR, const SolverOptions& opt = {});
EntropyReport h_min_conditional(const QuantumState& rho, const std::vector<std::string>& cond,
                                const SolverOptions& opt = {});
EntropyReport h_min_conditional(const FactoredState& rho, const std::vector<std::string>& cond,
                                const SolverOptions& opt = {});

double h2_collision(const Mat& F, int dA, int dR, const Mat& sigma);
double h2_collision(const QuantumState& rho_AB, const QuantumState& sigma_B);

double h_max_spectrum(const RVec& spectrum);
double h_max(const QuantumState& rho);
EntropyReport h_max_conditional(const QuantumState& psi, const std::vector<std::string>& part,
                                const std::vector<std::string>& cond,
                                const SolverOptions& opt = {});

struct Truncation {
  double lower_bound_bits = 0;
  int k = 0;  // 1-based
};
Truncation smooth_h_max_truncation(const std::vector<double>& spectrum, double eps);
double smooth_h_max_oracle(const std::vector<double>& spectrum, double eps);

double fannes_eta(double x);

struct MinCut {
  double value = 0;
  std::vector<std::string> cut;
};
MinCut min_cut_entanglement(const QuantumState& psi, const std::string& A, const std::string& B,
                            const std::vector<std::string>& helpers);

}  // namespace mergelab
