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

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "mergelab/closeness.hpp"
#include "mergelab/errors.hpp"
#include "mergelab/random.hpp"
#include "mergelab/state_io.hpp"

using namespace mergelab;
using mergelab::testing::det_state;
using mergelab::testing::loop_partial_trace;

TEST(Layout, RejectsBadSubsystems) {
  EXPECT_THROW(SystemLayout({{"", 2, Role::sender}}), LayoutError);
  EXPECT_THROW(SystemLayout({{"A", 0, Role::sender}}), LayoutError);
  EXPECT_THROW(SystemLayout({{"A", 2, Role::sender}, {"A", 3, Role::reference}}), LayoutError);
}

TEST(Layout, ConcatCollision) {
  SystemLayout a({{"A", 2, Role::sender}});
  EXPECT_THROW(a.concat(a), CompositionError);
  EXPECT_EQ(a.concat(SystemLayout({{"B", 3, Role::reference}})).total_dim(), 6);
}

TEST(Layout, RoleStringsRoundTrip) {
  for (Role r : {Role::sender, Role::receiverA, Role::receiverB, Role::reference, Role::ancilla})
    EXPECT_EQ(role_from_string(to_string(r)), r);
}

TEST(State, PartialTraceMatchesLoopOracle) {
  QuantumState psi = det_state({{"A", 2, Role::sender}, {"B", 3, Role::receiverB}, {"E", 2, Role::reference}});
  Mat rho = to_density(psi).mat();
  std::vector<int> dims{2, 3, 2};
  for (std::vector<int> keep : {std::vector<int>{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}}) {
    std::vector<std::string> labels;
    for (int k : keep) labels.push_back(std::string(1, "ABE"[k]));
    Mat want = loop_partial_trace(rho, dims, keep);
    EXPECT_LT((reduce(psi, labels).mat() - want).norm(), 1e-12);
    EXPECT_LT((reduce(to_density(psi), labels).mat() - want).norm(), 1e-12);
  }
}

TEST(State, ReduceKeepsRequestedOrder) {
  QuantumState psi = det_state({{"A", 2, Role::sender}, {"B", 3, Role::receiverB}});
  QuantumState r = reduce(psi, {"B", "A"});
  EXPECT_EQ(r.layout().labels(), (std::vector<std::string>{"B", "A"}));
  Mat direct = reduce(psi, {"A", "B"}).mat();
  Mat swapped = reduce(permute(to_density(psi), {"B", "A"}), {"A", "B"}).mat();
  EXPECT_LT((direct - swapped).norm(), 1e-12);
}

TEST(State, TensorProductTraceAndPurity) {
  QuantumState a = canonical_state(Canonical::max_entangled, 3, {"A", "B"});
  QuantumState b = canonical_state(Canonical::max_mixed, 2, {"C"});
  QuantumState ab = tensor_product(a, b);
  EXPECT_NEAR(ab.trace(), 1, 1e-12);
  EXPECT_NEAR(marginal_purity(ab, {"A"}), 1.0 / 3, 1e-12);
  EXPECT_NEAR(marginal_purity(ab, {"A", "B"}), 1, 1e-12);
}

TEST(State, ApplyLocalMatchesKron) {
  QuantumState psi = det_state({{"A", 2, Role::sender}, {"B", 3, Role::receiverB}});
  Rng rng(3);
  Mat U = haar_unitary(3, rng);
  QuantumState out = apply_local(psi, {"B"}, U, {{"B", 3, Role::receiverB}});
  Vec want = kron(Mat(Mat::Identity(2, 2)), U) * psi.vec();
  EXPECT_LT((permute(out, {"A", "B"}).vec() - want).norm(), 1e-12);
  QuantumState mixed = apply_local(to_density(psi), {"B"}, U, {{"B", 3, Role::receiverB}});
  EXPECT_LT((permute(mixed, {"A", "B"}).mat() - want * want.adjoint()).norm(), 1e-12);
}

TEST(State, SchmidtReconstructs) {
  QuantumState psi = det_state({{"A", 2, Role::sender}, {"B", 3, Role::receiverB}, {"E", 2, Role::reference}});
  Schmidt s = schmidt_decomposition(psi, {"A"});
  EXPECT_NEAR(s.coefficients.squaredNorm(), 1, 1e-12);
  for (long i = 1; i < s.coefficients.size(); ++i) EXPECT_GE(s.coefficients[i - 1], s.coefficients[i]);
  RVec sp = marginal_spectrum(psi, {"A"});
  for (long i = 0; i < s.coefficients.size(); ++i) EXPECT_NEAR(s.coefficients[i] * s.coefficients[i], sp[i], 1e-12);
}

TEST(State, PurifyRecoversMarginal) {
  Rng rng(5);
  Mat rho = random_density(4, 3, rng);
  QuantumState m = QuantumState::mixed(SystemLayout({{"A", 4, Role::sender}}), rho);
  QuantumState p = purify(m, "P");
  EXPECT_TRUE(p.is_vector());
  EXPECT_EQ(p.layout().dim("P"), 3);
  EXPECT_LT((reduce(p, {"A"}).mat() - rho).norm(), 1e-10);
  Mat bad = rho * 2;
  EXPECT_THROW(purify(QuantumState::mixed(SystemLayout({{"A", 4, Role::sender}}), bad), "P"), NormalizationError);
}

TEST(State, CanonicalStates) {
  QuantumState ghz = canonical_state(Canonical::ghz, 2, {"A", "B", "C"});
  EXPECT_NEAR(std::norm(ghz.vec()[0]), 0.5, 1e-12);
  EXPECT_NEAR(std::norm(ghz.vec()[7]), 0.5, 1e-12);
  EXPECT_THROW(canonical_state(Canonical::max_entangled, 2, {"A"}), LayoutError);
}

TEST(State, RelabelSetsRole) {
  QuantumState psi = det_state({{"A", 2, Role::sender}, {"B", 3, Role::receiverB}});
  QuantumState r = relabel(psi, {{"A", "X"}}, Role::reference);
  EXPECT_TRUE(r.layout().has("X"));
  EXPECT_EQ(r.layout()[r.layout().index_of("X")].role, Role::reference);
  EXPECT_EQ(r.layout()[r.layout().index_of("B")].role, Role::receiverB);
}

TEST(Random, HaarUnitaryIsUnitaryAndDeterministic) {
  Mat u = haar_unitary(6, 11);
  EXPECT_LT((u.adjoint() * u - Mat::Identity(6, 6)).norm(), 1e-12);
  EXPECT_EQ((haar_unitary(6, 11) - u).norm(), 0.0);
  EXPECT_GT((haar_unitary(6, 12) - u).norm(), 1e-3);
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
}

TEST(Random, HaarSecondMomentOfFirstEntry) {
  // E|U_00|^2 = 1/d, E|U_00|^4 = 2/(d(d+1)).
  const int d = 3, n = 20000;
  double m2 = 0, m4 = 0;
  Rng rng(99);
  for (int i = 0; i < n; ++i) {
    double a = std::norm(haar_unitary(d, rng)(0, 0));
    m2 += a / n;
    m4 += a * a / n;
  }
  EXPECT_NEAR(m2, 1.0 / d, 0.01);
  EXPECT_NEAR(m4, 2.0 / (d * (d + 1)), 0.01);
}

TEST(Closeness, FidelityMatchesOracle) {
  QuantumState psi = det_state({{"A", 2, Role::sender}, {"B", 3, Role::receiverB}, {"E", 2, Role::reference}});
  Mat rho = reduce(psi, {"A", "B"}).mat();
  Mat tau = Mat::Identity(6, 6) / 6.0;
  EXPECT_NEAR(fidelity(rho, tau), 0.5358562563928138, 1e-9);
  EXPECT_NEAR(closeness(rho, tau).trace_distance, 0.6788350029545367, 1e-9);
}

TEST(Closeness, SandwichesOnRandomPairs) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    int d = 2 + i % 5;
    Mat a = random_density(d, 1 + i % d, rng);
    Mat b = random_density(d, d, rng) * (i % 3 == 0 ? 0.7 : 1.0);
    Closeness c = closeness(a, b);
    if (i % 3 != 0) {
      EXPECT_LE(1 - c.fidelity, c.trace_distance + 1e-9);
      EXPECT_LE(c.trace_distance, std::sqrt(std::max(0.0, 1 - c.fidelity * c.fidelity)) + 1e-9);
    }
    EXPECT_LE(c.trace_distance, c.purified_distance + 1e-9);
    EXPECT_LE(c.purified_distance, 2 * std::sqrt(c.trace_distance) + 1e-9);
  }
}

TEST(Closeness, GeneralizedFidelityOnSubnormalized) {
  Mat a = Mat::Zero(2, 2), b = Mat::Zero(2, 2);
  a(0, 0) = 0.5;
  b(0, 0) = 0.5;
  EXPECT_NEAR(generalized_fidelity(a, b), 1.0, 1e-12);
  EXPECT_NEAR(purified_distance(a, b), 0.0, 1e-6);
}

TEST(Closeness, UhlmannAttainsFidelity) {
  QuantumState psi = det_state({{"A", 2, Role::sender}, {"B", 3, Role::receiverB}});
  QuantumState phi = QuantumState::pure(SystemLayout({{"A", 2, Role::sender}, {"X", 4, Role::ancilla}}),
                                        mergelab::testing::det_vector(8, 0.5, 0.2));
  PartialIsometry iso = uhlmann_isometry(psi, phi, {"B"});
  EXPECT_TRUE(iso.is_valid());
  QuantumState moved = apply_uhlmann(psi, phi, {"B"}, iso.matrix);
  double overlap = std::abs(phi.vec().dot(moved.vec()));
  double f = fidelity(reduce(psi, {"A"}).mat(), reduce(phi, {"A"}).mat());
  EXPECT_NEAR(overlap, f, 1e-10);
}

TEST(StateIo, RoundTripAndErrors) {
  QuantumState psi = det_state({{"A", 2, Role::sender}, {"R", 3, Role::reference}});
  QuantumState back = state_from_json(state_to_json(psi));
  EXPECT_EQ(back.layout(), psi.layout());
  EXPECT_LT((back.vec() - psi.vec()).norm(), 1e-15);
  QuantumState rho = to_density(psi);
  EXPECT_LT((state_from_json(state_to_json(rho)).mat() - rho.mat()).norm(), 1e-15);

  auto j = state_to_json(psi);
  j["kind"] = "matrix";
  EXPECT_THROW(state_from_json(j), InputError);
  j = state_to_json(psi);
  j["re"].erase(0);
  EXPECT_THROW(state_from_json(j), InputError);

  const std::string path = ::testing::TempDir() + "bad_state.json";
  std::ofstream(path) << "{\"layout\": [\n  {\"label\": \"A\", }\n]}";
  try {
    read_state_file(path);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos) << e.what();
  }
  std::remove(path.c_str());
}

TEST(Linalg, LowRankTraceDistanceMatchesDense) {
  Rng rng(1);
  std::vector<Vec> vs;
  std::vector<double> w{0.3, 0.5, 0.2};
  Mat dense = Mat::Zero(5, 5);
  for (int i = 0; i < 3; ++i) {
    vs.push_back(random_unit_vector(5, rng));
    dense += w[i] * vs.back() * vs.back().adjoint();
  }
  Vec u = random_unit_vector(5, rng);
  dense -= u * u.adjoint();
  EXPECT_NEAR(low_rank_trace_distance(vs, w, u), trace_norm_hermitian(dense), 1e-10);
}
