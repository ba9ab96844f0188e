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

#include "mergelab/errors.hpp"
#include "mergelab/merge.hpp"
#include "mergelab/random.hpp"

namespace mergelab {

std::string sender_ancilla(const std::string& sender) { return sender + "^0"; }
std::string sender_output(const std::string& sender) { return sender + "^1"; }
std::string receiver_ancilla(const std::string& rx, const std::string& s) {
  return (rx.empty() ? std::string("B") : rx) + "0_" + s;
}
std::string receiver_output(const std::string& rx, const std::string& s) {
  return (rx.empty() ? std::string("B") : rx) + "1_" + s;
}
std::string receiver_copy(const std::string& rx, const std::string& s) {
  return (rx.empty() ? std::string("B") : rx) + "_" + s;
}

std::vector<int> Instrument::outcome_labels() const {
  std::vector<int> out;
  for (int j = 1; j <= full_count; ++j) out.push_back(j);
  if (remainder_rank > 0) out.push_back(0);
  return out;
}

Mat Instrument::kraus(int j) const {
  const int D = input_dim();
  if (j >= 1 && j <= full_count) return U.middleRows((j - 1) * L, L);
  if (j == 0 && remainder_rank > 0) {
    Mat out = Mat::Zero(L, D);
    out.topRows(remainder_rank) = U.middleRows(full_count * L, remainder_rank);
    return out;
  }
  throw InputError("instrument has no outcome " + std::to_string(j));
}

Mat Instrument::completeness() const {
  Mat sum = Mat::Zero(input_dim(), input_dim());
  for (int j : outcome_labels()) {
    Mat k = kraus(j);
    sum += k.adjoint() * k;
  }
  return sum;
}

Instrument make_instrument(const std::string& sender, int d, int K, int L, std::uint64_t seed) {
  if (d < 1 || K < 1 || L < 1) throw RankError("instrument: dimensions must be positive");
  const long D = static_cast<long>(d) * K;
  if (L > D) throw RankError("instrument: rank L exceeds d K");
  Instrument ins;
  ins.sender = sender;
  ins.d = d;
  ins.K = K;
  ins.L = L;
  ins.seed = seed;
  ins.full_count = static_cast<int>(D / L);
  ins.remainder_rank = static_cast<int>(D - static_cast<long>(ins.full_count) * L);
  ins.U = haar_unitary(static_cast<int>(D), seed);
  const std::string in = sender + "," + sender_ancilla(sender);
  for (int j = 1; j <= ins.full_count; ++j)
    ins.isometries.push_back({in, sender_output(sender), ins.U.middleRows((j - 1) * L, L), L});
  if (ins.remainder_rank > 0)
    ins.isometries.push_back({in, sender_output(sender),
                              ins.U.middleRows(static_cast<long>(ins.full_count) * L, ins.remainder_rank),
                              ins.remainder_rank});
  return ins;
}

Instrument build_instrument(const SystemLayout& layout, const std::string& sender, int K, int L,
                            std::uint64_t seed) {
  return make_instrument(sender, layout.dim(sender), K, L, seed);
}

Parties merge_parties(const SystemLayout& layout) {
  Parties p;
  p.senders = layout.labels_with_role(Role::sender);
  auto b = layout.labels_with_role(Role::receiverB);
  auto a = layout.labels_with_role(Role::receiverA);
  if (b.size() + a.size() > 1) throw LayoutError("merging expects at most one receiver");
  if (!b.empty()) p.receiver = b[0];
  else if (!a.empty()) p.receiver = a[0];
  p.reference = layout.labels_with_role(Role::reference);
  if (p.senders.empty()) throw LayoutError("no sender systems in layout");
  return p;
}

QuantumState attach_entanglement(const QuantumState& psi, const std::vector<std::string>& senders,
                                 const std::string& receiver, const std::vector<int>& K) {
  if (K.size() != senders.size()) throw InputError("one K per sender required");
  QuantumState out = psi;
  for (std::size_t i = 0; i < senders.size(); ++i) {
    QuantumState phi = canonical_state(Canonical::max_entangled, K[i],
                                       {sender_ancilla(senders[i]), receiver_ancilla(receiver, senders[i])});
    out = tensor_product(out, phi);
  }
  return out;
}

OutcomeEnsemble apply_instruments(const QuantumState& psi_K, const std::vector<Instrument>& instr,
                                  const std::vector<std::string>& reference) {
  if (!psi_K.is_vector()) throw KindError("apply_instruments expects a pure state");
  struct Branch {
    std::vector<int> J;
    QuantumState state;
  };
  std::vector<Branch> branches{{{}, psi_K}};
  for (const auto& ins : instr) {
    const SystemLayout& layout = psi_K.layout();
    if (!layout.has(ins.sender)) throw LayoutError("instrument sender '" + ins.sender + "' not in layout");
    std::vector<std::string> inputs = {ins.sender};
    if (layout.has(sender_ancilla(ins.sender))) inputs.push_back(sender_ancilla(ins.sender));
    if (layout.dim_of(inputs) != ins.input_dim())
      throw LayoutError("instrument input dimension does not match '" + ins.sender + "'");
    std::vector<Subsystem> outputs = {{sender_output(ins.sender), ins.L, Role::ancilla}};
    std::vector<Branch> next;
    for (const auto& b : branches)
      for (int j : ins.outcome_labels()) {
        QuantumState s = apply_local(b.state, inputs, ins.kraus(j), outputs);
        if (s.trace() < kDropProbability) continue;
        std::vector<int> J = b.J;
        J.push_back(j);
        next.push_back({J, s});
      }
    branches = std::move(next);
  }
  OutcomeEnsemble ens;
  for (const auto& ins : instr) ens.output_labels.push_back(sender_output(ins.sender));
  ens.reference_labels = reference;
  ens.reference_state = reference.empty() ? Mat::Ones(1, 1) : reduce(psi_K, reference).mat();
  for (auto& b : branches) {
    double p = b.state.trace();
    Vec v = b.state.vec() / std::sqrt(p);
    ens.outcomes.push_back({b.J, p, QuantumState::pure(b.state.layout(), v)});
    ens.total_probability += p;
  }
  return ens;
}

double quantum_error(const OutcomeEnsemble& ensemble, const std::vector<int>& L) {
  long Ltot = 1;
  for (int l : L) Ltot *= l;
  Mat target = kron(Mat(Mat::Identity(Ltot, Ltot) / static_cast<double>(Ltot)), ensemble.reference_state);
  std::vector<std::string> keep = ensemble.output_labels;
  keep.insert(keep.end(), ensemble.reference_labels.begin(), ensemble.reference_labels.end());
  double q = 0;
  for (const auto& o : ensemble.outcomes) {
    Mat rho = reduce(o.state, keep).mat();
    if (rho.rows() != target.rows()) throw DimensionError("quantum_error: L does not match outputs");
    q += o.p * trace_norm_hermitian(rho - target);
  }
  return q;
}

}  // namespace mergelab
