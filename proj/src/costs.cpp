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
#include <set>

#include "mergelab/entropy.hpp"
#include "mergelab/errors.hpp"
#include "mergelab/merge.hpp"

namespace mergelab {
namespace {

int floor_log2(int d) {
  int k = 0;
  while ((2 << k) <= d) ++k;
  return d >= 2 ? k : 0;
}

std::vector<unsigned> subsets_by_size(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) out.push_back(mask);
  std::stable_sort(out.begin(), out.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    for (unsigned i = 0; i < 32; ++i) {
      bool ia = a & (1u << i), ib = b & (1u << i);
      if (ia != ib) return ia;
    }
    return false;
  });
  return out;
}

void finish(CostAssignment& c, const std::vector<int>& e, const std::vector<int>& dims) {
  c.logK.assign(e.size(), 0);
  c.logL.assign(e.size(), 0);
  c.feasible = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    c.logK[i] = std::max(e[i], 0);
    c.logL[i] = std::max(-e[i], 0);
    if (std::ldexp(1.0, c.logL[i]) > std::ldexp(static_cast<double>(dims[i]), c.logK[i])) c.feasible = false;
  }
}

}  // namespace

CostAssignment allocate_costs(const std::vector<std::string>& senders,
                              const std::vector<std::pair<unsigned, double>>& bounds,
                              const std::vector<int>& dims, double epsilon) {
  const unsigned m = static_cast<unsigned>(senders.size());
  if (dims.size() != m) throw InputError("allocate_costs: one dimension per sender");
  std::map<unsigned, double> rhs(bounds.begin(), bounds.end());
  std::vector<int> e(m);
  for (unsigned i = 0; i < m; ++i) e[i] = -floor_log2(dims[i]);
  for (unsigned mask : subsets_by_size(m)) {
    auto it = rhs.find(mask);
    if (it == rhs.end() || !std::isfinite(it->second)) continue;
    long have = 0;
    std::vector<unsigned> members;
    for (unsigned i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        have += e[i];
        members.push_back(i);
      }
    double need = std::ceil(it->second - static_cast<double>(have) - 1e-9);
    if (need <= 0) continue;
    long D = static_cast<long>(need);
    long share = D / static_cast<long>(members.size());
    long extra = D % static_cast<long>(members.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      e[members[k]] += static_cast<int>(share + (static_cast<long>(k) < extra ? 1 : 0));
  }
  CostAssignment c;
  c.senders = senders;
  c.epsilon = epsilon;
  c.bounds = bounds;
  c.real_costs.assign(m, 0.0);
  for (unsigned i = 0; i < m; ++i) {
    auto it = rhs.find(1u << i);
    c.real_costs[i] = it == rhs.end() ? 0.0 : it->second;
  }
  finish(c, e, dims);
  return c;
}

CostAssignment theorem4_cost(const QuantumState& psi, double epsilon) {
  if (!psi.is_vector()) throw KindError("theorem4_cost expects a pure state");
  if (!(epsilon > 0 && epsilon < 1)) throw InputError("epsilon must lie in (0,1)");
  Parties parties = merge_parties(psi.layout());
  const unsigned m = static_cast<unsigned>(parties.senders.size());
  QuantumState psiR;
  if (!parties.reference.empty()) psiR = reduce(psi, parties.reference);
  std::vector<std::pair<unsigned, double>> bounds;
  const double constant = 4 * std::log2(1 / epsilon) + 2.0 * m + 8;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::string> keep;
    for (unsigned i = 0; i < m; ++i)
      if (mask & (1u << i)) keep.push_back(parties.senders[i]);
    keep.insert(keep.end(), parties.reference.begin(), parties.reference.end());
    FactoredState f = marginal_factor(psi, keep);
    double h = parties.reference.empty() ? -log2_safe(max_eig(f.density()))
                                         : h_min_relative(f, psiR).value;
    bounds.push_back({mask, -h + constant});
  }
  std::vector<int> dims;
  for (const auto& s : parties.senders) dims.push_back(psi.layout().dim(s));
  return allocate_costs(parties.senders, bounds, dims, epsilon);
}

CostAssignment sequential_costs(const QuantumState& psi, double epsilon,
                                const std::vector<int>& permutation) {
  if (!psi.is_vector()) throw KindError("sequential_costs expects a pure state");
  if (!(epsilon > 0 && epsilon < 1)) throw InputError("epsilon must lie in (0,1)");
  Parties parties = merge_parties(psi.layout());
  const std::size_t m = parties.senders.size();
  std::vector<int> perm = permutation;
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == m;
  for (std::size_t i = 0; ok && i < m; ++i) ok = sorted[i] == static_cast<int>(i);
  if (!ok) throw InputError("sequential_costs: not a permutation of the senders");

  CostAssignment c;
  c.senders = parties.senders;
  c.epsilon = epsilon;
  c.smoothed = false;
  c.real_costs.assign(m, 0.0);
  std::vector<int> e(m), dims(m);
  const double constant = 4 * std::log2(static_cast<double>(m) / epsilon) + 12;
  for (std::size_t pos = 0; pos < m; ++pos) {
    const int i = perm[pos];
    const std::string& ci = parties.senders[i];
    std::vector<std::string> cond = parties.reference;
    for (std::size_t later = pos + 1; later < m; ++later) cond.push_back(parties.senders[perm[later]]);
    std::vector<std::string> keep{ci};
    keep.insert(keep.end(), cond.begin(), cond.end());
    FactoredState f = marginal_factor(psi, keep);
    double h = h_min_conditional(f, cond).value;
    double cost = -h + constant;
    c.real_costs[i] = cost;
    c.bounds.push_back({1u << i, cost});
    dims[i] = psi.layout().dim(ci);
    e[i] = std::max(static_cast<int>(std::ceil(cost - 1e-9)), -floor_log2(dims[i]));
  }
  finish(c, e, dims);
  return c;
}

}  // namespace mergelab
