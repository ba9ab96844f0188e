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
#include <map>

#include "mergelab/entropy.hpp"
#include "mergelab/errors.hpp"
#include "mergelab/random.hpp"
#include "mergelab/split.hpp"

namespace mergelab {
namespace {

struct Decoder {
  std::vector<std::string> inputs;
  std::vector<Subsystem> outputs;
  Mat V;
};

Decoder make_decoder(const QuantumState& outcome, const QuantumState& target,
                     const std::vector<std::string>& fixed) {
  Decoder dec;
  dec.inputs = outcome.layout().complement(fixed);
  for (const auto& l : target.layout().complement(fixed))
    dec.outputs.push_back(target.layout()[target.layout().index_of(l)]);
  Mat psi_c = coefficient_matrix(outcome, fixed);
  Mat phi_c = coefficient_matrix(target, fixed);
  Eigen::BDCSVD<Mat> svd(psi_c, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVec& sv = svd.singularValues();
  long r = 0;
  while (r < sv.size() && sv[r] > 1e-13) ++r;
  Mat compact = svd.matrixU().leftCols(r) * sv.head(r).asDiagonal();
  Mat Vc = uhlmann_from_coefficients(compact, phi_c);
  dec.V = Vc * svd.matrixV().leftCols(r).transpose();
  return dec;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<int> prefix(const std::vector<int>& J, std::size_t n, bool head) {
  return head ? std::vector<int>(J.begin(), J.begin() + n) : std::vector<int>(J.begin() + n, J.end());
}

std::map<std::string, std::string> copies(const std::vector<std::string>& helpers, const std::string& rx) {
  std::map<std::string, std::string> out;
  for (const auto& c : helpers) out[c] = receiver_copy(rx, c);
  return out;
}

std::vector<std::string> outputs_of(const std::vector<std::string>& helpers) {
  std::vector<std::string> out;
  for (const auto& c : helpers) out.push_back(sender_output(c));
  return out;
}

}  // namespace

SplitParties split_parties(const SystemLayout& layout, const std::vector<std::string>& T) {
  SplitParties p;
  auto a = layout.labels_with_role(Role::receiverA);
  auto b = layout.labels_with_role(Role::receiverB);
  if (a.size() != 1 || b.size() != 1) throw LayoutError("split transfer needs exactly one A and one B system");
  p.A = a[0];
  p.B = b[0];
  p.reference = layout.labels_with_role(Role::reference);
  auto helpers = layout.labels_with_role(Role::sender);
  for (const auto& t : T)
    if (std::find(helpers.begin(), helpers.end(), t) == helpers.end())
      throw LayoutError("'" + t + "' is not a helper system");
  for (const auto& h : helpers) {
    if (std::find(T.begin(), T.end(), h) != T.end()) p.T.push_back(h);
    else p.Tbar.push_back(h);
  }
  return p;
}

std::pair<double, double> split_delta_bounds(const QuantumState& psi, const SplitParties& parties,
                                             const SplitCosts& costs) {
  std::vector<int> dT, dTbar;
  for (const auto& c : parties.T) dT.push_back(psi.layout().dim(c));
  for (const auto& c : parties.Tbar) dTbar.push_back(psi.layout().dim(c));
  auto ref1 = concat(concat(parties.Tbar, {parties.B}), parties.reference);
  auto ref2 = concat(concat(parties.T, {parties.A}), parties.reference);
  auto p1 = cut_purities(psi, parties.T, ref1);
  auto p2 = cut_purities(psi, parties.Tbar, ref2);
  double d1 = delta_bound(dT, psi.layout().dim_of(ref1), costs.K, costs.L, p1).delta;
  double d2 = delta_bound(dTbar, psi.layout().dim_of(ref2), costs.M, costs.N, p2).delta;
  return {d1, d2};
}

SplitReport split_transfer_sim(const QuantumState& psi, const std::vector<std::string>& T,
                               const SplitCosts& costs, std::uint64_t seed) {
  if (!psi.is_vector()) throw KindError("split transfer expects a pure state");
  SplitParties sp = split_parties(psi.layout(), T);
  if (costs.K.size() != sp.T.size() || costs.L.size() != sp.T.size() ||
      costs.M.size() != sp.Tbar.size() || costs.N.size() != sp.Tbar.size())
    throw InputError("split transfer: one K, L per helper in T and one M, N per helper outside");
  double total = static_cast<double>(psi.layout().total_dim());
  for (int k : costs.K) total *= static_cast<double>(k) * k;
  for (int k : costs.M) total *= static_cast<double>(k) * k;
  if (total > 4096.0) throw ScaleError("split transfer: state with entanglement exceeds 2^12 dimensions");

  auto helpers = psi.layout().labels_with_role(Role::sender);
  auto index = [&](const std::string& c) {
    return static_cast<std::uint64_t>(std::find(helpers.begin(), helpers.end(), c) - helpers.begin());
  };
  std::vector<Instrument> instT, instTbar;
  for (std::size_t i = 0; i < sp.T.size(); ++i)
    instT.push_back(make_instrument(sp.T[i], psi.layout().dim(sp.T[i]), costs.K[i], costs.L[i],
                                    derive_seed(seed, index(sp.T[i]))));
  for (std::size_t i = 0; i < sp.Tbar.size(); ++i)
    instTbar.push_back(make_instrument(sp.Tbar[i], psi.layout().dim(sp.Tbar[i]), costs.M[i], costs.N[i],
                                       derive_seed(seed, index(sp.Tbar[i]))));

  SplitReport rep;
  rep.seed = seed;
  std::tie(rep.delta1, rep.delta2) = split_delta_bounds(psi, sp, costs);

  // First stage: T measured on psi (x) Phi^K, Alice decodes.
  QuantumState psiK = attach_entanglement(psi, sp.T, sp.A, costs.K);
  auto ref1 = concat(concat(sp.Tbar, {sp.B}), sp.reference);
  OutcomeEnsemble ens1 = apply_instruments(psiK, instT, ref1);
  rep.q1 = quantum_error(ens1, costs.L);

  QuantumState psi_sub = relabel(psi, copies(sp.T, sp.A), Role::receiverA);
  QuantumState target1 = psi_sub;
  for (std::size_t i = 0; i < sp.T.size(); ++i)
    target1 = tensor_product(canonical_state(Canonical::max_entangled, costs.L[i],
                                             {sender_output(sp.T[i]), receiver_output(sp.A, sp.T[i])}),
                             target1);
  auto fixed1 = concat(outputs_of(sp.T), ref1);
  std::map<std::vector<int>, Decoder> alice;
  for (const auto& o : ens1.outcomes) alice[o.J] = make_decoder(o.state, target1, fixed1);

  // Second stage: Tbar measured on psi_sub (x) Gamma^M, Bob decodes.
  QuantumState subM = attach_entanglement(psi_sub, sp.Tbar, sp.B, costs.M);
  std::vector<std::string> ref2;
  for (const auto& c : sp.T) ref2.push_back(receiver_copy(sp.A, c));
  ref2.push_back(sp.A);
  ref2 = concat(ref2, sp.reference);
  OutcomeEnsemble ens2 = apply_instruments(subM, instTbar, ref2);
  rep.q2 = quantum_error(ens2, costs.N);

  QuantumState target2 = relabel(psi_sub, copies(sp.Tbar, sp.B), Role::receiverB);
  for (std::size_t i = 0; i < sp.Tbar.size(); ++i)
    target2 = tensor_product(canonical_state(Canonical::max_entangled, costs.N[i],
                                             {sender_output(sp.Tbar[i]), receiver_output(sp.B, sp.Tbar[i])}),
                             target2);
  auto fixed2 = concat(outputs_of(sp.Tbar), ref2);
  std::map<std::vector<int>, Decoder> bob;
  for (const auto& o : ens2.outcomes) bob[o.J] = make_decoder(o.state, target2, fixed2);

  // Actual run: both measurements on psi (x) Phi^K (x) Gamma^M, then both decoders.
  QuantumState full = attach_entanglement(psiK, sp.Tbar, sp.B, costs.M);
  std::vector<Instrument> all = instT;
  all.insert(all.end(), instTbar.begin(), instTbar.end());
  OutcomeEnsemble ens = apply_instruments(full, all, {});

  QuantumState final_target = target2;
  for (std::size_t i = 0; i < sp.T.size(); ++i)
    final_target = tensor_product(
        canonical_state(Canonical::max_entangled, costs.L[i],
                        {sender_output(sp.T[i]), receiver_output(sp.A, sp.T[i])}),
        final_target);
  const auto order = final_target.layout().labels();

  std::vector<Vec> outs;
  std::vector<double> weights;
  for (const auto& o : ens.outcomes) {
    auto a = alice.find(prefix(o.J, sp.T.size(), true));
    auto b = bob.find(prefix(o.J, sp.T.size(), false));
    if (a == alice.end() || b == bob.end()) continue;
    QuantumState s = apply_local(o.state, a->second.inputs, a->second.V, a->second.outputs);
    s = apply_local(s, b->second.inputs, b->second.V, b->second.outputs);
    outs.push_back(permute(s, order).vec());
    weights.push_back(o.p);
  }
  rep.end_error = low_rank_trace_distance(outs, weights, final_target.vec());
  rep.bound = 2 * std::sqrt(rep.q1) + 2 * std::sqrt(rep.q2);
  rep.bound_holds = rep.end_error <= rep.bound + 1e-6;
  return rep;
}

std::pair<CostAssignment, CostAssignment> prop8_split_costs(const QuantumState& psi,
                                                            const std::vector<std::string>& T,
                                                            double eps1, double eps2) {
  if (!psi.is_vector()) throw KindError("prop8_split_costs expects a pure state");
  if (!(eps1 > 0 && eps1 < 1) || !(eps2 > 0 && eps2 < 1)) throw InputError("epsilons must lie in (0,1)");
  SplitParties sp = split_parties(psi.layout(), T);
  auto side = [&](const std::vector<std::string>& group, const std::vector<std::string>& cond,
                  double eps, std::size_t weight) {
    QuantumState sigma = reduce(psi, cond);
    const unsigned m = static_cast<unsigned>(group.size());
    const double constant = 4 * std::log2(1 / eps) + 2.0 * static_cast<double>(weight) + 8;
    std::vector<std::pair<unsigned, double>> bounds;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<std::string> keep;
      for (unsigned i = 0; i < m; ++i)
        if (mask & (1u << i)) keep.push_back(group[i]);
      keep = concat(keep, cond);
      bounds.push_back({mask, -h_min_relative(marginal_factor(psi, keep), sigma).value + constant});
    }
    std::vector<int> dims;
    for (const auto& c : group) dims.push_back(psi.layout().dim(c));
    return allocate_costs(group, bounds, dims, eps);
  };
  auto condT = concat(concat(sp.Tbar, {sp.B}), sp.reference);
  auto condTbar = concat(concat(sp.T, {sp.A}), sp.reference);
  return {side(sp.T, condT, eps1, sp.T.size()), side(sp.Tbar, condTbar, eps2, sp.Tbar.size())};
}

}  // namespace mergelab
