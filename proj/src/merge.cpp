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


#include <algorithm>
#include <cmath>

#include "mergelab/entropy.hpp"
#include "mergelab/errors.hpp"
#include "mergelab/merge.hpp"
#include "mergelab/random.hpp"

namespace mergelab {
namespace {

std::vector<std::string> subset_labels(const std::vector<std::string>& senders, unsigned mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < senders.size(); ++i)
    if (mask & (1u << i)) out.push_back(senders[i]);
  return out;
}

double product_over(const std::vector<int>& v, unsigned mask) {
  double p = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (mask & (1u << i)) p *= v[i];
  return p;
}

std::vector<int> ones(std::size_t n) { return std::vector<int>(n, 1); }

}  // namespace

std::map<unsigned, double> cut_purities(const QuantumState& psi, const std::vector<std::string>& senders,
                                        const std::vector<std::string>& reference) {
  std::map<unsigned, double> out;
  const unsigned m = static_cast<unsigned>(senders.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::string> keep = reference;
    for (const auto& l : subset_labels(senders, mask)) keep.push_back(l);
    out[mask] = keep.empty() ? 1.0 : marginal_purity(psi, keep);
  }
  return out;
}

DeltaBound delta_bound(const std::vector<int>& d, long dR, const std::vector<int>& K,
                       const std::vector<int>& L, const std::map<unsigned, double>& purities) {
  const std::size_t m = d.size();
  if (K.size() != m || L.size() != m) throw InputError("delta_bound: vector sizes differ");
  DeltaBound b;
  double inner = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    auto it = purities.find(mask);
    if (it == purities.end()) throw InputError("delta_bound: missing purity for a cut");
    b.remainder_term += product_over(L, mask) / (product_over(d, mask) * product_over(K, mask));
    inner += product_over(L, mask) / product_over(K, mask) * it->second;
  }
  b.remainder_term *= 2;
  b.gamma = 2 * std::sqrt(static_cast<double>(dR) * inner);
  b.delta = b.remainder_term + b.gamma;
  return b;
}

double coeff_r(int d, int L) {
  if (d == 1) return 0.0;
  return static_cast<double>(L) * (d - L) / (static_cast<double>(d) * (static_cast<double>(d) * d - 1));
}

double coeff_s(int d, int L) {
  if (d == 1) return 1.0;
  return static_cast<double>(L) * (static_cast<double>(L) * d - 1) /
         (static_cast<double>(d) * (static_cast<double>(d) * d - 1));
}

double expected_omega_purity(const std::vector<int>& d, const std::vector<int>& L,
                             const std::map<unsigned, double>& purities_with_empty) {
  const std::size_t m = d.size();
  double sum = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    double w = 1;
    for (std::size_t i = 0; i < m; ++i)
      w *= (mask & (1u << i)) ? coeff_s(d[i], L[i]) : coeff_r(d[i], L[i]);
    sum += w * purities_with_empty.at(mask);
  }
  return sum;
}

double lemma3_rhs(const std::vector<int>& d, long dR, const std::vector<int>& K,
                  const std::vector<int>& L, const std::map<unsigned, double>& purities) {
  const std::size_t m = d.size();
  double inner = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask)
    inner += product_over(L, mask) / product_over(K, mask) * purities.at(mask);
  double Lt = product_over(L, (1u << m) - 1);
  double dK = product_over(d, (1u << m) - 1) * product_over(K, (1u << m) - 1);
  return Lt / dK * std::sqrt(static_cast<double>(dR) * inner);
}

LemmaThree lemma3_residual(const QuantumState& psi, const std::vector<Mat>& unitaries,
                           const std::vector<int>& L, const std::vector<int>& K) {
  Parties parties = merge_parties(psi.layout());
  const std::size_t m = parties.senders.size();
  std::vector<int> Kv = K.empty() ? ones(m) : K;
  if (unitaries.size() != m || L.size() != m || Kv.size() != m)
    throw InputError("lemma3: one unitary, L and K per sender");
  QuantumState s = attach_entanglement(psi, parties.senders, parties.receiver, Kv);
  std::vector<int> d;
  for (const auto& l : parties.senders) d.push_back(psi.layout().dim(l));
  std::vector<std::string> keep;
  double scale = 1;
  long Lt = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const std::string& c = parties.senders[i];
    Mat op = unitaries[i].topRows(L[i]);
    s = apply_local(s, {c, sender_ancilla(c)}, op, {{sender_output(c), L[i], Role::ancilla}});
    keep.push_back(sender_output(c));
    scale *= static_cast<double>(d[i]) * Kv[i];
    Lt *= L[i];
  }
  keep.insert(keep.end(), parties.reference.begin(), parties.reference.end());
  Mat omega = reduce(s, keep).mat();
  Mat psiR = parties.reference.empty() ? Mat::Ones(1, 1) : reduce(psi, parties.reference).mat();
  Mat target = kron(Mat(Mat::Identity(Lt, Lt)), psiR) / scale;
  LemmaThree out;
  out.lhs = trace_norm_hermitian(omega - target);
  auto purities = cut_purities(psi, parties.senders, parties.reference);
  out.rhs = lemma3_rhs(d, psi.layout().dim_of(parties.reference), Kv, L, purities);
  return out;
}

LemmaThree lemma3_residual_and_bound(const QuantumState& psi, const std::vector<int>& L,
                                     std::uint64_t seed, const std::vector<int>& K) {
  Parties parties = merge_parties(psi.layout());
  const std::size_t m = parties.senders.size();
  std::vector<int> Kv = K.empty() ? ones(m) : K;
  std::vector<Mat> us;
  for (std::size_t i = 0; i < m; ++i)
    us.push_back(haar_unitary(psi.layout().dim(parties.senders[i]) * Kv[i], derive_seed(seed, i)));
  return lemma3_residual(psi, us, L, Kv);
}

double lemma4_bound(const QuantumState& psi, const QuantumState& sigma_R, const std::vector<int>& L,
                    const std::vector<int>& K) {
  Parties parties = merge_parties(psi.layout());
  const std::size_t m = parties.senders.size();
  std::vector<int> Kv = K.empty() ? ones(m) : K;
  double inner = 0;
  double Lt = 1, dK = 1;
  for (std::size_t i = 0; i < m; ++i) {
    Lt *= L[i];
    dK *= static_cast<double>(psi.layout().dim(parties.senders[i])) * Kv[i];
  }
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::string> keep = subset_labels(parties.senders, mask);
    keep.insert(keep.end(), parties.reference.begin(), parties.reference.end());
    FactoredState f = marginal_factor(psi, keep);
    double h;
    if (parties.reference.empty()) {
      h = -log2_safe(max_eig(f.density()));
    } else {
      h = h_min_relative(f, sigma_R).value;
    }
    inner += std::pow(2.0, -(h + std::log2(product_over(Kv, mask)) - std::log2(product_over(L, mask))));
  }
  return Lt / dK * std::sqrt(inner);
}

double lemma4_probe(const QuantumState& psi, const std::vector<int>& L, const std::vector<int>& K) {
  Parties parties = merge_parties(psi.layout());
  const std::size_t m = parties.senders.size();
  std::vector<int> Kv = K.empty() ? ones(m) : K;
  double inner = 0;
  double Lt = 1, dK = 1;
  for (std::size_t i = 0; i < m; ++i) {
    Lt *= L[i];
    dK *= static_cast<double>(psi.layout().dim(parties.senders[i])) * Kv[i];
  }
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::string> keep = subset_labels(parties.senders, mask);
    keep.insert(keep.end(), parties.reference.begin(), parties.reference.end());
    FactoredState f = marginal_factor(psi, keep);
    double h = h_min_conditional(f, parties.reference).value;
    inner += std::pow(2.0, -(h + std::log2(product_over(Kv, mask)) - std::log2(product_over(L, mask))));
  }
  return Lt / dK * std::sqrt(inner);
}

std::vector<int> CostAssignment::K() const {
  std::vector<int> out;
  for (int k : logK) {
    if (k < 0 || k > 30) throw ScaleError("entanglement dimension 2^" + std::to_string(k) + " out of range");
    out.push_back(1 << k);
  }
  return out;
}

std::vector<int> CostAssignment::L() const {
  std::vector<int> out;
  for (int l : logL) {
    if (l < 0 || l > 30) throw ScaleError("entanglement dimension 2^" + std::to_string(l) + " out of range");
    out.push_back(1 << l);
  }
  return out;
}

SimulationReport run_merging(const QuantumState& psi, const std::vector<int>& K,
                             const std::vector<int>& L, std::uint64_t seed) {
  if (!psi.is_vector()) throw KindError("run_merging expects a pure state");
  Parties parties = merge_parties(psi.layout());
  const std::size_t m = parties.senders.size();
  if (K.size() != m || L.size() != m) throw InputError("run_merging: one K and L per sender");
  double total = static_cast<double>(psi.layout().total_dim());
  for (int k : K) total *= static_cast<double>(k) * k;
  if (total > 4096.0) throw ScaleError("run_merging: state with entanglement exceeds 2^12 dimensions");

  SimulationReport rep;
  rep.seed = seed;
  rep.m = static_cast<int>(m);
  rep.K = K;
  rep.L = L;
  for (const auto& c : parties.senders) rep.dims.push_back(psi.layout().dim(c));

  std::vector<Instrument> instr;
  for (std::size_t i = 0; i < m; ++i)
    instr.push_back(make_instrument(parties.senders[i], rep.dims[i], K[i], L[i], derive_seed(seed, i)));

  QuantumState psiK = attach_entanglement(psi, parties.senders, parties.receiver, K);
  OutcomeEnsemble ens = apply_instruments(psiK, instr, parties.reference);
  rep.outcome_count = static_cast<int>(ens.outcomes.size());
  rep.q_error = quantum_error(ens, L);

  auto purities = cut_purities(psi, parties.senders, parties.reference);
  const long dR = psi.layout().dim_of(parties.reference);
  DeltaBound db = delta_bound(rep.dims, dR, K, L, purities);
  rep.delta_bound = db.delta;
  rep.gamma = db.gamma;
  for (unsigned mask = 1; mask < (1u << m); ++mask)
    rep.per_cut.push_back({mask, purities[mask], product_over(L, mask) / product_over(K, mask)});
  for (std::size_t i = 0; i < m; ++i) {
    rep.r.push_back(coeff_r(rep.dims[i] * K[i], L[i]));
    rep.s.push_back(coeff_s(rep.dims[i] * K[i], L[i]));
  }

  const double p_full = product_over(L, (1u << m) - 1) /
                        (product_over(rep.dims, (1u << m) - 1) * product_over(K, (1u << m) - 1));
  for (const auto& o : ens.outcomes) {
    bool has_zero = std::find(o.J.begin(), o.J.end(), 0) != o.J.end();
    if (has_zero) rep.remainder_mass += o.p;
    else rep.full_rank_deviation += std::abs(o.p - p_full);
  }

  // Receiver's target: Phi^L on (C^1_i, B^1_i) and psi with C_i moved to B_i.
  std::map<std::string, std::string> moved;
  for (const auto& c : parties.senders) moved[c] = receiver_copy(parties.receiver, c);
  QuantumState target = relabel(psi, moved, Role::receiverB);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string& c = parties.senders[i];
    target = tensor_product(canonical_state(Canonical::max_entangled, L[i],
                                            {sender_output(c), receiver_output(parties.receiver, c)}),
                            target);
  }
  std::vector<std::string> fixed = ens.output_labels;
  fixed.insert(fixed.end(), parties.reference.begin(), parties.reference.end());
  Mat phi_c = coefficient_matrix(target, fixed);
  Vec phi_flat(phi_c.size());
  for (long i = 0; i < phi_c.rows(); ++i)
    for (long j = 0; j < phi_c.cols(); ++j) phi_flat[i * phi_c.cols() + j] = phi_c(i, j);

  std::vector<Vec> outs;
  std::vector<double> weights;
  for (const auto& o : ens.outcomes) {
    Mat psi_c = coefficient_matrix(o.state, fixed);
    Eigen::BDCSVD<Mat> svd(psi_c, Eigen::ComputeThinU);
    const RVec& sv = svd.singularValues();
    long r = 0;
    while (r < sv.size() && sv[r] > 1e-13) ++r;
    Mat compact = svd.matrixU().leftCols(r) * sv.head(r).asDiagonal();
    Mat V = uhlmann_from_coefficients(compact, phi_c);
    Mat out_c = compact * V.transpose();
    Vec flat(out_c.size());
    for (long i = 0; i < out_c.rows(); ++i)
      for (long j = 0; j < out_c.cols(); ++j) flat[i * out_c.cols() + j] = out_c(i, j);
    outs.push_back(flat);
    weights.push_back(o.p);
  }
  rep.end_to_end_error = low_rank_trace_distance(outs, weights, phi_flat);
  rep.bound_2sqrt = 2 * std::sqrt(rep.q_error);
  rep.bound_holds = rep.end_to_end_error <= rep.bound_2sqrt + 1e-6;

  std::vector<Mat> us;
  for (const auto& ins : instr) us.push_back(ins.U);
  LemmaThree l3 = lemma3_residual(psi, us, L, K);
  rep.lemma3_lhs = l3.lhs;
  rep.lemma3_rhs = l3.rhs;
  return rep;
}

SimulationReport run_merging(const QuantumState& psi, const CostAssignment& cost, std::uint64_t seed) {
  if (!cost.feasible) throw RankError("cost assignment is infeasible for these dimensions");
  for (std::size_t i = 0; i < cost.logK.size(); ++i)
    if (cost.logK[i] > 20 || cost.logL[i] > 20) throw ScaleError("cost assignment too large to simulate");
  return run_merging(psi, cost.K(), cost.L(), seed);
}

}  // namespace mergelab
