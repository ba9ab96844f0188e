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


#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "mergelab/entropy.hpp"
#include "mergelab/errors.hpp"
#include "mergelab/random.hpp"
#include "mergelab/region.hpp"
#include "mergelab/split.hpp"

using namespace mergelab;
using mergelab::testing::roles;

namespace {

SystemLayout four_qubits() {
  return SystemLayout({{"C1", 2, Role::sender}, {"C2", 2, Role::sender}, {"A", 2, Role::receiverA},
                       {"B", 2, Role::receiverB}});
}

// Haar state pulled toward EPR(C1,A) x phi(C2,B).
QuantumState tilted_four_qubits(std::uint64_t seed, double weight) {
  QuantumState epr = canonical_state(Canonical::max_entangled, 2, {"C1", "A"});
  QuantumState rest = random_pure_state(SystemLayout({{"C2", 2, Role::sender}, {"B", 2, Role::receiverB}}), seed ^ 0x5eed);
  Vec v = permute(tensor_product(epr, rest), {"C1", "C2", "A", "B"}).vec();
  v += weight * random_pure_state(four_qubits(), seed).vec();
  return QuantumState::pure(four_qubits(), v.normalized());
}

double S(const QuantumState& psi, std::vector<std::string> part, std::vector<std::string> cond) {
  std::vector<std::string> all = part;
  all.insert(all.end(), cond.begin(), cond.end());
  return entropy_of(psi, all) - (cond.empty() ? 0.0 : entropy_of(psi, cond));
}

}  // namespace

TEST(Split, PartiesAndErrors) {
  QuantumState psi = random_pure_state(four_qubits(), 1);
  SplitParties p = split_parties(psi.layout(), {"C2"});
  EXPECT_EQ(p.T, std::vector<std::string>{"C2"});
  EXPECT_EQ(p.Tbar, std::vector<std::string>{"C1"});
  EXPECT_THROW(split_parties(psi.layout(), {"A"}), LayoutError);
  SystemLayout noA({{"C1", 2, Role::sender}, {"B", 2, Role::receiverB}});
  EXPECT_THROW(split_parties(noA, {}), LayoutError);
}

TEST(Split, BoundHoldsOnRandomStates) {
  for (int s = 0; s < 4; ++s) {
    QuantumState psi = random_pure_state(four_qubits(), 500 + s);
    for (int seed = 0; seed < 5; ++seed) {
      SplitReport r = split_transfer_sim(psi, {"C1"}, {{2}, {2}, {2}, {2}}, seed);
      EXPECT_TRUE(r.bound_holds) << r.end_error << " > " << r.bound;
      EXPECT_NEAR(r.bound, 2 * std::sqrt(r.q1) + 2 * std::sqrt(r.q2), 1e-12);
    }
  }
}

TEST(Split, DegeneratePartitions) {
  QuantumState psi = random_pure_state(four_qubits(), 8);
  SplitReport none = split_transfer_sim(psi, {}, {{}, {}, {1, 1}, {2, 2}}, 3);
  EXPECT_NEAR(none.q1, 0, 1e-12);
  EXPECT_EQ(none.delta1, 0);
  EXPECT_TRUE(none.bound_holds);
  SplitReport all = split_transfer_sim(psi, {"C1", "C2"}, {{1, 1}, {2, 2}, {}, {}}, 3);
  EXPECT_NEAR(all.q2, 0, 1e-12);
  EXPECT_TRUE(all.bound_holds);
}

TEST(Split, DeltaBoundsMatchPurityFormula) {
  QuantumState psi = random_pure_state(four_qubits(), 2);
  SplitParties p = split_parties(psi.layout(), {"C1"});
  SplitCosts c{{2}, {2}, {2}, {2}};
  auto [d1, d2] = split_delta_bounds(psi, p, c);
  double want1 = 1 + 2 * std::sqrt(4 * marginal_purity(psi, {"C1", "C2", "B"}));
  double want2 = 1 + 2 * std::sqrt(4 * marginal_purity(psi, {"C1", "C2", "A"}));
  EXPECT_NEAR(d1, want1, 1e-12);
  EXPECT_NEAR(d2, want2, 1e-12);
}

TEST(SplitCosts, ConstraintsMatchBruteForce) {
  QuantumState ghz = roles(canonical_state(Canonical::ghz, 2, {"C1", "A", "B"}),
                           {{"C1", Role::sender}, {"A", Role::receiverA}, {"B", Role::receiverB}});
  auto [t, tb] = prop8_split_costs(ghz, {"C1"}, 0.5, 0.5);
  ASSERT_EQ(t.bounds.size(), 1u);
  EXPECT_TRUE(tb.bounds.empty());
  double h = h_min_relative(marginal_factor(ghz, {"C1", "B"}), reduce(ghz, {"B"})).value;
  EXPECT_NEAR(t.bounds[0].second, -h + 4 + 2 + 8, 1e-9);
}

TEST(SplitCosts, MirrorSymmetry) {
  QuantumState psi = random_pure_state(four_qubits(), 6);
  QuantumState swapped = relabel(relabel(psi, {{"A", "B_"}}, Role::receiverB), {{"B", "A"}}, Role::receiverA);
  swapped = relabel(swapped, {{"B_", "B"}}, Role::receiverB);
  auto [t, tb] = prop8_split_costs(psi, {"C1"}, 0.4, 0.4);
  auto [s, sb] = prop8_split_costs(swapped, {"C2"}, 0.4, 0.4);
  EXPECT_NEAR(t.bounds[0].second, sb.bounds[0].second, 1e-9);
  EXPECT_NEAR(tb.bounds[0].second, s.bounds[0].second, 1e-9);
}

TEST(Region, EprSingleSender) {
  QuantumState epr = roles(canonical_state(Canonical::max_entangled, 2, {"C1", "B"}),
                           {{"C1", Role::sender}, {"B", Role::receiverB}});
  CostRegion r = build_merge_region(epr, {"C1"}, "B");
  ASSERT_EQ(r.inequalities.size(), 1u);
  EXPECT_NEAR(r.inequalities[0].rhs, -1, 1e-12);
  EXPECT_EQ(r.provenance, Provenance::thm1);
  EXPECT_THROW(build_merge_region(to_density(epr), {"C1"}, "B"), KindError);
}

TEST(Region, MatchesBruteForceEntropies) {
  SystemLayout lay({{"C1", 2, Role::sender}, {"C2", 2, Role::sender}, {"B", 2, Role::receiverB}});
  QuantumState psi = random_pure_state(lay, 14);
  CostRegion r = build_merge_region(psi, {"C1", "C2"}, "B");
  EXPECT_NEAR(r.inequalities[0].rhs, S(psi, {"C1"}, {"C2", "B"}), 1e-10);
  EXPECT_NEAR(r.inequalities[1].rhs, S(psi, {"C2"}, {"C1", "B"}), 1e-10);
  EXPECT_NEAR(r.inequalities[2].rhs, S(psi, {"C1", "C2"}, {"B"}), 1e-10);
}

TEST(Region, ContainsReportsViolations) {
  CostRegion r{{"C1", "C2"}, {{1, 0.5}, {2, 0.2}, {3, 1.0}}, Provenance::compression};
  Membership m = contains(r, {0.5, 0.4});
  EXPECT_FALSE(m.inside);
  ASSERT_EQ(m.violated.size(), 1u);
  EXPECT_EQ(m.violated[0], 3u);
  EXPECT_TRUE(contains(r, {10.5, 10.4}).inside);
  EXPECT_THROW(contains(r, {1.0}), DimensionError);
}

TEST(Region, CornerPoints) {
  QuantumState epr = roles(canonical_state(Canonical::max_entangled, 2, {"C1", "C2"}),
                           {{"C1", Role::sender}, {"C2", Role::sender}});
  auto [p, q] = corner_points_m2(epr);
  EXPECT_NEAR(p[0], 1, 1e-12);
  EXPECT_NEAR(p[1], -1, 1e-12);
  EXPECT_NEAR(q[0], -1, 1e-12);
  EXPECT_NEAR(q[1], 1, 1e-12);

  SystemLayout lay({{"C1", 2, Role::sender}, {"C2", 2, Role::sender}, {"R", 2, Role::reference}});
  QuantumState psi = random_pure_state(lay, 5);
  CostRegion r = build_merge_region(psi, {"C1", "C2"}, "");
  auto [a, b] = corner_points_m2(psi);
  Membership ma = contains(r, a), mb = contains(r, b);
  EXPECT_TRUE(ma.inside);
  EXPECT_TRUE(mb.inside);
  EXPECT_NEAR(ma.slack[1], 0, 1e-9);  // C2 given C1
  EXPECT_NEAR(ma.slack[2], 0, 1e-9);
  EXPECT_NEAR(mb.slack[0], 0, 1e-9);
  EXPECT_NEAR(mb.slack[2], 0, 1e-9);

  QuantumState trivial = tensor_product(
      roles(canonical_state(Canonical::max_entangled, 2, {"C1", "R"}), {{"C1", Role::sender}, {"R", Role::reference}}),
      QuantumState::pure(SystemLayout({{"C2", 2, Role::sender}}), Vec::Unit(2, 0)));
  auto [u, v] = corner_points_m2(trivial);
  EXPECT_NEAR(u[0], v[0], 1e-12);
  EXPECT_NEAR(u[1], 0, 1e-12);
  EXPECT_THROW(corner_points_m2(roles(epr, {{"C2", Role::receiverB}})), ScopeError);
}

TEST(Region, SplitFamilies) {
  QuantumState psi = random_pure_state(four_qubits(), 31);
  SplitRegion all = build_split_region(psi, {"C1", "C2"}, "A", "B");
  EXPECT_TRUE(all.Tbar_side.inequalities.empty());
  CostRegion toward_a = build_merge_region(psi, {"C1", "C2"}, "A");
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_NEAR(all.T_side.inequalities[i].rhs, toward_a.inequalities[i].rhs, 1e-12);
  SplitRegion half = build_split_region(psi, {"C1"}, "A", "B");
  EXPECT_NEAR(half.T_side.inequalities[0].rhs, S(psi, {"C1"}, {"A"}), 1e-10);
  EXPECT_NEAR(half.Tbar_side.inequalities[0].rhs, S(psi, {"C2"}, {"B"}), 1e-10);
  EXPECT_THROW(build_split_region(psi, {"C1", "C1"}, "A", "B"), InputError);
}

TEST(Region, AssistedRateAndCorollary) {
  int checked = 0;
  for (int s = 0; s < 30; ++s) {
    QuantumState psi = s % 2 ? tilted_four_qubits(900 + s, 0.5) : random_pure_state(four_qubits(), 900 + s);
    double brute = std::min({entropy_of(psi, {"A"}), entropy_of(psi, {"A", "C1"}), entropy_of(psi, {"A", "C2"}),
                             entropy_of(psi, {"A", "C1", "C2"})});
    EXPECT_NEAR(assisted_rate(psi, "A", "B", {"C1", "C2"}), brute, 1e-12);
    MinCut mc = min_cut_entanglement(psi, "A", "B", {"C1", "C2"});
    if (mc.cut.empty() || mc.cut.size() == 2) continue;
    ++checked;
    SplitRegion r = build_split_region(psi, mc.cut, "A", "B");
    for (const auto& q : r.T_side.inequalities) EXPECT_LT(q.rhs, -1e-9);
    for (const auto& q : r.Tbar_side.inequalities) EXPECT_LE(q.rhs, 1e-9);
  }
  EXPECT_GT(checked, 0);
}

TEST(OneShot, PointsAndConstantGap) {
  SystemLayout lay({{"C1", 2, Role::sender}, {"R", 2, Role::reference}, {"B", 2, Role::receiverB}});
  QuantumState psi = random_pure_state(lay, 19);
  OneShotRegions r = one_shot_regions(psi, 0.5);
  ASSERT_EQ(r.prop5_points.size(), 1u);
  CostAssignment seq = sequential_costs(psi, 0.5, {0});
  // Optimized conditioning only raises H_min, so the gap is at least -2.
  EXPECT_GE(r.thm4.inequalities[0].rhs - seq.real_costs[0], -2 - 1e-9);

  SystemLayout two({{"C1", 2, Role::sender}, {"C2", 2, Role::sender}, {"R", 4, Role::reference}});
  EXPECT_EQ(one_shot_regions(random_pure_state(two, 4), 0.5).prop5_points.size(), 2u);
}

TEST(RegionIo, JsonRoundTripAndCsv) {
  CostRegion r{{"C1", "C2"}, {{1, -0.5}, {2, 0.25}, {3, -0.513}}, Provenance::thm4};
  auto j = region_to_json(r);
  EXPECT_EQ(j["inequalities"][2]["subset"], nlohmann::json::array({0, 1}));
  CostRegion back = region_from_json(j);
  EXPECT_EQ(back.senders, r.senders);
  EXPECT_EQ(back.provenance, Provenance::thm4);
  ASSERT_EQ(back.inequalities.size(), 3u);
  EXPECT_EQ(back.inequalities[2].subset, 3u);
  EXPECT_EQ(back.inequalities[2].rhs, -0.513);
  j["provenance"] = "nope";
  EXPECT_THROW(region_from_json(j), InputError);

  Prop5Point p;
  p.permutation = {1, 0};
  p.costs = {3, 4};
  EXPECT_EQ(prop5_csv({"C1", "C2"}, {p}), "permutation,cost_C1,cost_C2,finite,dominance_closed\n1-0,3,4,1,1\n");
}
