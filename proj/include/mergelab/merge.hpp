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
#include <map>
#include <string>
#include <vector>

#include "mergelab/closeness.hpp"
#include "mergelab/state.hpp"

namespace mergelab {

// Label conventions for ancillas created by the protocols.
std::string sender_ancilla(const std::string& sender);                     // C^0_i
std::string sender_output(const std::string& sender);                      // C^1_i
std::string receiver_ancilla(const std::string& rx, const std::string& s);  // B^0_i
std::string receiver_output(const std::string& rx, const std::string& s);   // B^1_i
std::string receiver_copy(const std::string& rx, const std::string& s);     // B_i

/// Random von Neumann measurement on C_i C^0_i: N full-rank outcomes of rank L and
/// an optional remainder of rank L' < L padded into the L-dimensional output.
struct Instrument {
  std::string sender;
  int d = 1;
  int K = 1;
  int L = 1;
  int full_count = 0;
  int remainder_rank = 0;
  std::uint64_t seed = 0;
  Mat U;
  std::vector<PartialIsometry> isometries;  // outcomes 1..N, then the remainder if any

  int input_dim() const { return d * K; }
  std::vector<int> outcome_labels() const;  // 0 is the remainder
  Mat kraus(int j) const;
  Mat completeness() const;
};

Instrument make_instrument(const std::string& sender, int d, int K, int L, std::uint64_t seed);
Instrument build_instrument(const SystemLayout& layout, const std::string& sender, int K, int L,
                            std::uint64_t seed);

struct Parties {
  std::vector<std::string> senders;
  std::string receiver;  // empty when the receiver holds no side information
  std::vector<std::string> reference;
};
Parties merge_parties(const SystemLayout& layout);

// psi (x) Phi^{K_i} with halves C^0_i (sender) and B^0_i (receiver).
QuantumState attach_entanglement(const QuantumState& psi, const std::vector<std::string>& senders,
                                 const std::string& receiver, const std::vector<int>& K);

struct Outcome {
  std::vector<int> J;
  double p = 0;
  QuantumState state;  // normalized
};

struct OutcomeEnsemble {
  std::vector<Outcome> outcomes;
  std::vector<std::string> output_labels;
  std::vector<std::string> reference_labels;
  Mat reference_state;  // psi^R
  double total_probability = 0;
};

inline constexpr double kDropProbability = 1e-14;

OutcomeEnsemble apply_instruments(const QuantumState& psi_K, const std::vector<Instrument>& instr,
                                  const std::vector<std::string>& reference);

double quantum_error(const OutcomeEnsemble& ensemble, const std::vector<int>& L);

struct CutTerm {
  unsigned mask = 0;
  double purity = 0;  // Tr[(psi^{RT})^2]
  double weight = 0;  // prod_{i in T} L_i / K_i
};

struct DeltaBound {
  double delta = 0;
  double gamma = 0;
  double remainder_term = 0;
};

std::map<unsigned, double> cut_purities(const QuantumState& psi, const std::vector<std::string>& senders,
                                        const std::vector<std::string>& reference);

DeltaBound delta_bound(const std::vector<int>& d, long dR, const std::vector<int>& K,
                       const std::vector<int>& L, const std::map<unsigned, double>& purities);

// Second-moment coefficients of a rank-L projection after a Haar unitary on d dims.
double coeff_r(int d, int L);
double coeff_s(int d, int L);
double expected_omega_purity(const std::vector<int>& d, const std::vector<int>& L,
                             const std::map<unsigned, double>& purities_with_empty);

struct LemmaThree {
  double lhs = 0;
  double rhs = 0;
};

double lemma3_rhs(const std::vector<int>& d, long dR, const std::vector<int>& K,
                  const std::vector<int>& L, const std::map<unsigned, double>& purities);
LemmaThree lemma3_residual_and_bound(const QuantumState& psi, const std::vector<int>& L,
                                     std::uint64_t seed, const std::vector<int>& K = {});
LemmaThree lemma3_residual(const QuantumState& psi, const std::vector<Mat>& unitaries,
                           const std::vector<int>& L, const std::vector<int>& K);

double lemma4_bound(const QuantumState& psi, const QuantumState& sigma_R, const std::vector<int>& L,
                    const std::vector<int>& K = {});
// Per-cut optimized conditioning states; evaluated for comparison only.
double lemma4_probe(const QuantumState& psi, const std::vector<int>& L,
                    const std::vector<int>& K = {});

struct SimulationReport {
  std::uint64_t seed = 0;
  int m = 0;
  std::vector<int> dims;
  std::vector<int> K;
  std::vector<int> L;
  double q_error = 0;
  double delta_bound = 0;
  double gamma = 0;
  std::vector<CutTerm> per_cut;
  std::vector<double> r;
  std::vector<double> s;
  double end_to_end_error = 0;
  double bound_2sqrt = 0;
  bool bound_holds = true;
  double lemma3_lhs = 0;
  double lemma3_rhs = 0;
  double remainder_mass = 0;
  double full_rank_deviation = 0;  // sum_J |p_J - L/(d K)| over full-rank outcomes
  int outcome_count = 0;
};

struct CostAssignment {
  std::vector<std::string> senders;
  std::vector<int> logK;
  std::vector<int> logL;
  double epsilon = 0;
  std::vector<std::pair<unsigned, double>> bounds;  // subset mask -> real lower bound
  std::vector<double> real_costs;
  bool smoothed = false;
  bool feasible = true;

  std::vector<int> K() const;
  std::vector<int> L() const;
  int cost(std::size_t i) const { return logK[i] - logL[i]; }
};

SimulationReport run_merging(const QuantumState& psi, const std::vector<int>& K,
                             const std::vector<int>& L, std::uint64_t seed);
SimulationReport run_merging(const QuantumState& psi, const CostAssignment& cost,
                             std::uint64_t seed);

CostAssignment theorem4_cost(const QuantumState& psi, double epsilon);
CostAssignment sequential_costs(const QuantumState& psi, double epsilon,
                                const std::vector<int>& permutation);

// Integral costs for per-subset lower bounds: equalized excess, ties by sender order.
CostAssignment allocate_costs(const std::vector<std::string>& senders,
                              const std::vector<std::pair<unsigned, double>>& bounds,
                              const std::vector<int>& dims, double epsilon);

}  // namespace mergelab
