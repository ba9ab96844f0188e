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


#include <cmath>
#include <functional>
#include <sstream>

#include "mergelab/cli.hpp"
#include "mergelab/closeness.hpp"
#include "mergelab/embezzle.hpp"
#include "mergelab/entropy.hpp"
#include "mergelab/merge.hpp"
#include "mergelab/random.hpp"
#include "mergelab/region.hpp"
#include "mergelab/split.hpp"
#include "mergelab/sweep.hpp"
#include "mergelab/typicality.hpp"

namespace mergelab {
namespace {

using Check = std::function<std::string()>;  // empty string on success

std::string near(double got, double want, double tol, const char* what) {
  if (std::abs(got - want) <= tol) return {};
  std::ostringstream os;
  os.precision(12);
  os << what << ": got " << got << ", want " << want;
  return os.str();
}

QuantumState with_roles(QuantumState s, const std::vector<std::pair<std::string, Role>>& roles) {
  for (const auto& [l, r] : roles) s = relabel(s, {{l, l}}, r);
  return s;
}

std::vector<std::pair<std::string, Check>> quick_checks() {
  std::vector<std::pair<std::string, Check>> c;
  c.push_back({"max-entangled conditional min-entropy", [] {
    for (int d = 2; d <= 4; ++d) {
      QuantumState phi = canonical_state(Canonical::max_entangled, d, {"A", "B"});
      auto e = near(h_min_conditional(phi, {"B"}).value, -std::log2(d), 1e-6, "H_min(A|B)");
      if (!e.empty()) return e;
    }
    return std::string();
  }});
  c.push_back({"product state min-entropy", [] {
    QuantumState s = canonical_state(Canonical::max_mixed, 3, {"A"});
    return near(h_min_conditional(s, {}).value, std::log2(3.0), 1e-9, "H_min(A)");
  }});
  c.push_back({"EPR merging region", [] {
    QuantumState epr = with_roles(canonical_state(Canonical::max_entangled, 2, {"C1", "B"}),
                                  {{"C1", Role::sender}, {"B", Role::receiverB}});
    CostRegion r = build_merge_region(epr, {"C1"}, "B");
    return near(r.inequalities.at(0).rhs, -1, 1e-9, "S(C1|B)");
  }});
  c.push_back({"compression corners of an EPR pair", [] {
    QuantumState epr = with_roles(canonical_state(Canonical::max_entangled, 2, {"C1", "C2"}),
                                  {{"C1", Role::sender}, {"C2", Role::sender}});
    auto [p, q] = corner_points_m2(epr);
    auto e = near(p[0], 1, 1e-9, "corner 1 x");
    if (e.empty()) e = near(p[1], -1, 1e-9, "corner 1 y");
    if (e.empty()) e = near(q[0], -1, 1e-9, "corner 2 x");
    if (e.empty()) e = near(q[1], 1, 1e-9, "corner 2 y");
    return e;
  }});
  c.push_back({"upward closure of regions", [] {
    SystemLayout lay({{"C1", 2, Role::sender}, {"C2", 2, Role::sender}, {"R", 2, Role::reference}});
    QuantumState psi = random_pure_state(lay, 3);
    CostRegion r = build_merge_region(psi, {"C1", "C2"}, "");
    auto [p, q] = corner_points_m2(psi);
    if (!contains(r, p).inside || !contains(r, q).inside) return std::string("corner outside region");
    if (!contains(r, {p[0] + 10, p[1] + 10}).inside) return std::string("shifted corner outside region");
    return std::string();
  }});
  c.push_back({"instrument completeness", [] {
    Instrument ins = make_instrument("C1", 3, 2, 4, 5);
    Mat comp = ins.completeness();
    double dev = (comp - Mat::Identity(comp.rows(), comp.cols())).norm();
    return dev <= 1e-9 ? std::string() : "deviation " + std::to_string(dev);
  }});
  c.push_back({"merging with nothing to merge", [] {
    QuantumState a = with_roles(canonical_state(Canonical::ghz, 1, {"C1"}), {{"C1", Role::sender}});
    QuantumState s = tensor_product(
        with_roles(QuantumState::pure(SystemLayout({{"B", 2, Role::receiverB}}), Vec::Unit(2, 0)), {}), a);
    auto r = run_merging(s, {1}, {1}, 1);
    return near(r.end_to_end_error, 0, 1e-9, "end error");
  }});
  c.push_back({"embezzling Schmidt spectrum at d=2", [] {
    EmbezzleParams p;
    p.d = 2;
    p.family = Family::orthonormal;
    RVec sp = marginal_spectrum(build_embezzling(p), {"C1"});
    auto e = near(sp[0], 2.0 / 3, 1e-12, "r1");
    return e.empty() ? near(sp[1], 1.0 / 3, 1e-12, "r2") : e;
  }});
  c.push_back({"singlet fraction at d=2", [] {
    EmbezzleParams p;
    p.d = 2;
    double want = std::pow(1 + 1 / std::sqrt(2.0), 2) / 3;
    return near(singlet_fraction(p).aligned_overlap, want, 1e-12, "aligned overlap");
  }});
  c.push_back({"cost comparison table", [] {
    EmbezzleParams p;
    p.d = 1024;
    p.epsilon = 0.1;
    CostComparison cc = cost_comparison(p);
    auto e = near(cc.thm4_sum, 35.29, 0.01, "thm4 sum");
    if (e.empty()) e = near(cc.prop5_lower, 67.25, 0.01, "prop5 lower");
    if (e.empty() && !cc.thm4_below) e = "thm4 sum not below";
    return e;
  }});
  c.push_back({"truncation on (1/2,1/4,1/4)", [] {
    return near(smooth_h_max_truncation({0.5, 0.25, 0.25}, std::sqrt(0.5)).lower_bound_bits, -1, 0,
                "truncation bound");
  }});
  c.push_back({"GHZ assisted rate", [] {
    QuantumState g = with_roles(canonical_state(Canonical::ghz, 2, {"A", "B", "C1"}),
                                {{"A", Role::receiverA}, {"B", Role::receiverB}, {"C1", Role::sender}});
    return near(assisted_rate(g, "A", "B", {"C1"}), 1, 1e-9, "assisted rate");
  }});
  c.push_back({"typical projector rank sandwich", [] {
    Mat rho = Mat::Zero(2, 2);
    rho(0, 0) = 0.8;
    rho(1, 1) = 0.2;
    TypicalityData t = typicality(rho, 6, 0.2);
    double lo = t.mass * std::exp2(t.n * (t.entropy - t.delta));
    double hi = std::exp2(t.n * (t.entropy + t.delta));
    if (t.rank < lo - 1e-9 || t.rank > hi + 1e-9) return std::string("rank outside sandwich");
    return std::string();
  }});
  c.push_back({"sequential points for two senders", [] {
    SystemLayout lay({{"C1", 2, Role::sender}, {"C2", 2, Role::sender}, {"R", 4, Role::reference}});
    auto r = one_shot_regions(random_pure_state(lay, 9), 0.5);
    return r.prop5_points.size() == 2 ? std::string() : std::string("expected two points");
  }});
  return c;
}

std::vector<std::pair<std::string, Check>> full_checks() {
  std::vector<std::pair<std::string, Check>> c;
  c.push_back({"decoupling and error bounds on random states", [] {
    SystemLayout lay({{"C1", 4, Role::sender}, {"C2", 4, Role::sender}, {"R", 4, Role::reference}});
    for (int s = 0; s < 3; ++s) {
      QuantumState psi = random_pure_state(lay, 100 + s);
      SweepConfig cfg{{1, 1}, {2, 2}, static_cast<std::uint64_t>(s), 60};
      double lhs = 0, q = 0;
      auto reps = sweep_merging(psi, cfg);
      for (const auto& r : reps) {
        lhs += r.lemma3_lhs / reps.size();
        q += r.q_error / reps.size();
        if (!r.bound_holds) return std::string("end error above 2 sqrt(Q)");
      }
      if (lhs > reps[0].lemma3_rhs) return std::string("mean decoupling residual above bound");
      if (q > reps[0].delta_bound) return std::string("mean Q above Delta");
    }
    return std::string();
  }});
  c.push_back({"min-entropy below collision entropy", [] {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
      int dA = 2 + i % 3, dB = 2 + (i / 3) % 3;
      Mat rho = random_density(dA * dB, dA * dB, rng);
      Mat sigma = random_density(dB, dB, rng);
      SystemLayout lay({{"A", dA, Role::sender}, {"B", dB, Role::reference}});
      SystemLayout lb({{"B", dB, Role::reference}});
      double hmin = h_min_relative(QuantumState::mixed(lay, rho), QuantumState::mixed(lb, sigma)).value;
      double h2 = h2_collision(QuantumState::mixed(lay, rho), QuantumState::mixed(lb, sigma));
      if (hmin > h2 + 1e-9) return std::string("H_min exceeded H_2");
    }
    return std::string();
  }});
  c.push_back({"solver certificate gap", [] {
    for (int i = 0; i < 20; ++i) {
      SystemLayout lay({{"A", 2 + i % 3, Role::sender}, {"B", 2 + (i / 3) % 3, Role::reference},
                        {"E", 2, Role::ancilla}});
      QuantumState rho = reduce(random_pure_state(lay, 500 + i), {"A", "B"});
      EntropyReport r = h_min_conditional(rho, {"B"});
      if (r.gap > 1e-6) return "gap " + std::to_string(r.gap);
    }
    return std::string();
  }});
  c.push_back({"split transfer bound", [] {
    SystemLayout lay({{"C1", 2, Role::sender}, {"C2", 2, Role::sender}, {"A", 2, Role::receiverA},
                      {"B", 2, Role::receiverB}});
    QuantumState psi = random_pure_state(lay, 44);
    for (int s = 0; s < 10; ++s)
      if (!split_transfer_sim(psi, {"C1"}, {{2}, {2}, {2}, {2}}, s).bound_holds)
        return std::string("end error above bound");
    return std::string();
  }});
  c.push_back({"parallel sweep matches serial", [] {
    SystemLayout lay({{"C1", 2, Role::sender}, {"C2", 2, Role::sender}, {"R", 2, Role::reference}});
    QuantumState psi = random_pure_state(lay, 8);
    SweepConfig cfg{{1, 1}, {2, 2}, 3, 8};
    auto a = sweep_merging_ref(psi, cfg);
    auto b = sweep_merging(psi, cfg);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].q_error != b[i].q_error || a[i].end_to_end_error != b[i].end_to_end_error)
        return std::string("mismatch at sample ") + std::to_string(i);
    return std::string();
  }});
  c.push_back({"embezzling duality at d=16", [] {
    EmbezzleParams p;
    p.d = 16;
    p.alpha = 1.0 / 16;
    QuantumState psi = build_embezzling(p);
    EntropyReport r = h_min_conditional(psi, {"R", "C2"});
    return near(-r.value, embezzle_hmax(16), 1e-6 + r.gap, "duality");
  }});
  return c;
}

}  // namespace

std::vector<CheckResult> run_selftest(bool quick) {
  auto checks = quick_checks();
  if (!quick)
    for (auto& c : full_checks()) checks.push_back(std::move(c));
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = fn();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace mergelab
