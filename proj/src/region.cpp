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
#include <numeric>
#include <sstream>

#include "mergelab/entropy.hpp"
#include "mergelab/errors.hpp"
#include "mergelab/merge.hpp"
#include "mergelab/region.hpp"

namespace mergelab {
namespace {

std::vector<std::string> pick(const std::vector<std::string>& labels, unsigned mask, bool in) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (static_cast<bool>(mask & (1u << i)) == in) out.push_back(labels[i]);
  return out;
}

double conditional(const QuantumState& psi, const std::vector<std::string>& part,
                   const std::vector<std::string>& cond) {
  if (cond.empty()) return entropy_of(psi, part);
  return cond_von_neumann(psi, part, cond);
}

// Sum_{i in X} x_i >= S(X | (group \ X) extra) for every nonempty X in group.
CostRegion family(const QuantumState& psi, const std::vector<std::string>& group,
                  const std::vector<std::string>& extra, Provenance prov) {
  if (group.size() > 12) throw ScaleError("at most 12 senders supported");
  CostRegion r;
  r.senders = group;
  r.provenance = prov;
  const unsigned m = static_cast<unsigned>(group.size());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    auto cond = pick(group, mask, false);
    cond.insert(cond.end(), extra.begin(), extra.end());
    r.inequalities.push_back({mask, conditional(psi, pick(group, mask, true), cond)});
  }
  return r;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::thm1: return "thm1";
    case Provenance::compression: return "compression";
    case Provenance::thm4: return "thm4";
    case Provenance::prop5_point: return "prop5_point";
    case Provenance::thm5_T_side: return "thm5_T_side";
    case Provenance::thm5_Tbar_side: return "thm5_Tbar_side";
    case Provenance::prop8: return "prop8";
  }
  return "thm1";
}

Provenance provenance_from_string(const std::string& s) {
  for (Provenance p : {Provenance::thm1, Provenance::compression, Provenance::thm4, Provenance::prop5_point,
                       Provenance::thm5_T_side, Provenance::thm5_Tbar_side, Provenance::prop8})
    if (to_string(p) == s) return p;
  throw InputError("unknown provenance '" + s + "'");
}

CostRegion build_merge_region(const QuantumState& psi, const std::vector<std::string>& senders,
                              const std::string& receiver) {
  if (!psi.is_vector()) throw KindError("build_merge_region expects a pure state");
  for (const auto& s : senders)
    if (!psi.layout().has(s)) throw LayoutError("unknown sender '" + s + "'");
  std::vector<std::string> extra;
  bool trivial = receiver.empty() || psi.layout().dim(receiver) == 1;
  if (!receiver.empty()) extra.push_back(receiver);
  return family(psi, senders, extra, trivial ? Provenance::compression : Provenance::thm1);
}

Membership contains(const CostRegion& region, const std::vector<double>& x, double tol) {
  if (x.size() != region.senders.size()) throw DimensionError("rate vector length differs from sender count");
  Membership m;
  for (const auto& q : region.inequalities) {
    double sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (q.subset & (1u << i)) sum += x[i];
    double slack = sum - q.rhs;
    m.slack.push_back(slack);
    if (slack < -tol) {
      m.inside = false;
      m.violated.push_back(q.subset);
    }
  }
  return m;
}

std::pair<std::vector<double>, std::vector<double>> corner_points_m2(const QuantumState& psi) {
  Parties p = merge_parties(psi.layout());
  if (p.senders.size() != 2) throw ScopeError("corner points need exactly two senders");
  const auto& c1 = p.senders[0];
  const auto& c2 = p.senders[1];
  std::vector<std::string> b;
  if (!p.receiver.empty()) b.push_back(p.receiver);
  auto with = [&](std::vector<std::string> v, const std::string& s) {
    v.push_back(s);
    return v;
  };
  std::vector<double> first{conditional(psi, {c1}, b), conditional(psi, {c2}, with(b, c1))};
  std::vector<double> second{conditional(psi, {c1}, with(b, c2)), conditional(psi, {c2}, b)};
  return {first, second};
}

SplitRegion build_split_region(const QuantumState& psi, const std::vector<std::string>& T,
                               const std::string& A, const std::string& B) {
  if (!psi.is_vector()) throw KindError("build_split_region expects a pure state");
  if (!psi.layout().has(A) || !psi.layout().has(B)) throw LayoutError("A and B must be present");
  std::vector<std::string> sorted = T;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("partition lists a helper twice");
  auto helpers = psi.layout().labels_with_role(Role::sender);
  std::vector<std::string> inT, outT;
  for (const auto& t : T) {
    if (t == A || t == B || std::find(helpers.begin(), helpers.end(), t) == helpers.end())
      throw InputError("'" + t + "' is not a helper");
  }
  for (const auto& h : helpers)
    (std::find(T.begin(), T.end(), h) != T.end() ? inT : outT).push_back(h);
  SplitRegion r;
  r.T_side = family(psi, inT, {A}, Provenance::thm5_T_side);
  r.Tbar_side = family(psi, outT, {B}, Provenance::thm5_Tbar_side);
  return r;
}

double assisted_rate(const QuantumState& psi, const std::string& A, const std::string& B,
                     const std::vector<std::string>& helpers) {
  return min_cut_entanglement(psi, A, B, helpers).value;
}

OneShotRegions one_shot_regions(const QuantumState& psi, double epsilon) {
  OneShotRegions out;
  CostAssignment t4 = theorem4_cost(psi, epsilon);
  out.thm4.senders = t4.senders;
  out.thm4.provenance = Provenance::thm4;
  for (const auto& [mask, rhs] : t4.bounds) out.thm4.inequalities.push_back({mask, rhs});

  const std::size_t m = t4.senders.size();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    CostAssignment c = sequential_costs(psi, epsilon, perm);
    Prop5Point pt;
    pt.permutation = perm;
    for (std::size_t i = 0; i < m; ++i) {
      pt.costs.push_back(static_cast<double>(c.cost(i)));
      if (!std::isfinite(c.real_costs[i])) pt.finite = false;
    }
    out.prop5_points.push_back(pt);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // A point is flagged when another ordering's point lies weakly below it everywhere.
  for (auto& p : out.prop5_points) {
    for (const auto& q : out.prop5_points) {
      if (&p == &q || p.costs == q.costs) continue;
      bool below = true;
      for (std::size_t i = 0; i < m; ++i) below = below && q.costs[i] <= p.costs[i];
      if (below) p.dominance_closed = false;
    }
  }
  return out;
}

nlohmann::json region_to_json(const CostRegion& r) {
  nlohmann::json j;
  j["senders"] = r.senders;
  j["inequalities"] = nlohmann::json::array();
  for (const auto& q : r.inequalities) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < r.senders.size(); ++i)
      if (q.subset & (1u << i)) idx.push_back(static_cast<int>(i));
    j["inequalities"].push_back({{"subset", idx}, {"rhs", q.rhs}});
  }
  j["provenance"] = to_string(r.provenance);
  return j;
}

CostRegion region_from_json(const nlohmann::json& j) {
  try {
    CostRegion r;
    r.senders = j.at("senders").get<std::vector<std::string>>();
    r.provenance = provenance_from_string(j.at("provenance").get<std::string>());
    for (const auto& q : j.at("inequalities")) {
      unsigned mask = 0;
      for (int i : q.at("subset").get<std::vector<int>>()) {
        if (i < 0 || i >= static_cast<int>(r.senders.size())) throw InputError("subset index out of range");
        mask |= 1u << i;
      }
      r.inequalities.push_back({mask, q.at("rhs").get<double>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed region JSON: ") + e.what());
  }
}

std::string prop5_csv(const std::vector<std::string>& senders, const std::vector<Prop5Point>& pts) {
  std::ostringstream os;
  os << "permutation";
  for (const auto& s : senders) os << ",cost_" << s;
  os << ",finite,dominance_closed\n";
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < p.permutation.size(); ++i) os << (i ? "-" : "") << p.permutation[i];
    for (double c : p.costs) os << ',' << c;
    os << ',' << (p.finite ? 1 : 0) << ',' << (p.dominance_closed ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace mergelab
