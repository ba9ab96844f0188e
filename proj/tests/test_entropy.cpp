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

#include "helpers.hpp"
#include "mergelab/entropy.hpp"
#include "mergelab/errors.hpp"
#include "mergelab/random.hpp"
#include "mergelab/typicality.hpp"

using namespace mergelab;
using mergelab::testing::det_state;

namespace {

QuantumState abe() {
  return det_state({{"A", 2, Role::sender}, {"B", 3, Role::receiverB}, {"E", 2, Role::reference}});
}

// lambda_max by bisection on positivity of lambda (I (x) sigma) - rho.
double bisect_hmin(const Mat& rho, const Mat& sigma, int dA) {
  Mat big = kron(Mat(Mat::Identity(dA, dA)), sigma);
  double lo = 0, hi = 1;
  while (min_eig(hi * big - rho) < 0) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (min_eig(mid * big - rho) >= 0 ? hi : lo) = mid;
  }
  return -std::log2(hi);
}

}  // namespace

TEST(Entropy, OracleValues) {
  QuantumState psi = abe();
  EXPECT_NEAR(entropy_of(psi, {"A"}), 0.6971812271341676, 1e-10);
  EXPECT_NEAR(cond_von_neumann(psi, {"A"}, {"B"}), -0.493213694990033, 1e-10);
  QuantumState rAB = reduce(psi, {"A", "B"});
  QuantumState rB = reduce(psi, {"B"});
  EXPECT_NEAR(h_min_relative(rAB, rB).value, -0.9531385036951175, 1e-9);
  EXPECT_NEAR(h2_collision(rAB, rB), -0.6475877796584025, 1e-9);
  // SDP values from an external conic solver.
  EXPECT_NEAR(h_min_conditional(rAB, {"B"}).value, -0.6777718605356483, 1e-5);
  EXPECT_NEAR(h_max_conditional(psi, {"A"}, {"B"}).value, -0.054717913459286616, 1e-5);
  EXPECT_NEAR(h_max(reduce(psi, {"A"})), 0.8329775379041133, 1e-10);
}

TEST(Entropy, RelativeMinEntropyMatchesBisection) {
  Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    int dA = 2 + i % 2, dB = 2 + i % 3;
    Mat rho = random_density(dA * dB, 1 + i % (dA * dB), rng);
    Mat sigma = random_density(dB, dB, rng);
    SystemLayout lay({{"A", dA, Role::sender}, {"B", dB, Role::reference}});
    double got = h_min_relative(QuantumState::mixed(lay, rho),
                                QuantumState::mixed(SystemLayout({{"B", dB, Role::reference}}), sigma))
                     .value;
    EXPECT_NEAR(got, bisect_hmin(rho, sigma, dA), 1e-8);
  }
}

TEST(Entropy, RelativeMinEntropyWitnessIsTight) {
  QuantumState psi = abe();
  QuantumState rAB = reduce(psi, {"A", "B"});
  QuantumState rB = reduce(psi, {"B"});
  EntropyReport r = h_min_relative(rAB, rB);
  double lam = std::exp2(-r.value);
  Mat gap = lam * kron(Mat(Mat::Identity(2, 2)), rB.mat()) - rAB.mat();
  EXPECT_GE(min_eig(gap), -1e-9);
  EXPECT_LE(min_eig(gap), 1e-9);
}

TEST(Entropy, SupportViolationThrows) {
  Mat rho = Mat::Identity(4, 4) / 4.0;
  Mat sigma = Mat::Zero(2, 2);
  sigma(0, 0) = 1;
  SystemLayout lay({{"A", 2, Role::sender}, {"B", 2, Role::reference}});
  EXPECT_THROW(h_min_relative(QuantumState::mixed(lay, rho),
                              QuantumState::mixed(SystemLayout({{"B", 2, Role::reference}}), sigma)),
               SupportError);
}

TEST(Entropy, MaxEntangledConditional) {
  for (int d = 2; d <= 8; ++d) {
    QuantumState phi = canonical_state(Canonical::max_entangled, d, {"A", "B"});
    EXPECT_NEAR(h_min_conditional(phi, {"B"}).value, -std::log2(d), 1e-6);
    EXPECT_NEAR(h_min_conditional(to_density(phi), {"B"}).value, -std::log2(d), 1e-6);
  }
}

TEST(Entropy, ProductConditioningGivesUnconditional) {
  Rng rng(4);
  Mat a = random_density(3, 3, rng), b = random_density(2, 2, rng);
  QuantumState s = QuantumState::mixed(SystemLayout({{"A", 3, Role::sender}, {"B", 2, Role::reference}}), kron(a, b));
  EXPECT_NEAR(h_min_conditional(s, {"B"}).value, -std::log2(max_eig(a)), 1e-6);
}

TEST(Entropy, SolverPropertiesOnRandomStates) {
  for (int i = 0; i < 40; ++i) {
    int dA = 2 + i % 3, dB = 2 + (i / 3) % 3;
    SystemLayout lay({{"A", dA, Role::sender}, {"B", dB, Role::reference}, {"E", 1 + i % 4, Role::ancilla}});
    QuantumState psi = random_pure_state(lay, 1000 + i);
    QuantumState rho = reduce(psi, {"A", "B"});
    EntropyReport opt = h_min_conditional(rho, {"B"});
    EXPECT_LE(opt.gap, 1e-6);
    ASSERT_TRUE(opt.sigma.has_value());
    EXPECT_NEAR(opt.sigma->trace().real(), 1, 1e-9);
    // Optimized value dominates the marginal choice and never exceeds H_min(A).
    EXPECT_GE(opt.value, h_min_relative(rho, reduce(psi, {"B"})).value - 1e-9);
    EXPECT_LE(opt.value, -std::log2(max_eig(reduce(psi, {"A"}).mat())) + 1e-7);
    // Witness certifies the reported value.
    double lam = std::exp2(-opt.value);
    Mat cert = lam * kron(Mat(Mat::Identity(dA, dA)), *opt.sigma) - rho.mat();
    EXPECT_GE(min_eig(cert), -1e-7 * lam);
  }
}

TEST(Entropy, DualityOnTripartitePure) {
  for (int i = 0; i < 15; ++i) {
    SystemLayout lay({{"A", 2, Role::sender}, {"B", 2 + i % 2, Role::receiverB}, {"C", 2, Role::reference}});
    QuantumState psi = random_pure_state(lay, 77 + i);
    EntropyReport hmax = h_max_conditional(psi, {"A"}, {"B"});
    EntropyReport hmin = h_min_conditional(reduce(psi, {"A", "C"}), {"C"});
    EXPECT_NEAR(hmax.value + hmin.value, 0, 1e-6 + hmin.gap);
  }
}

TEST(Entropy, HMaxUnconditionalIsSpectralFormula) {
  RVec r(3);
  r << 0.5, 0.3, 0.2;
  EXPECT_NEAR(h_max_spectrum(r), 2 * std::log2(std::sqrt(0.5) + std::sqrt(0.3) + std::sqrt(0.2)), 1e-14);
  QuantumState psi = abe();
  EXPECT_NEAR(h_max_conditional(psi, {"A"}, {}).value, h_max(reduce(psi, {"A"})), 1e-7);
}

TEST(Entropy, StrongSubadditivityOfMinEntropy) {
  for (int i = 0; i < 20; ++i) {
    SystemLayout lay({{"T", 2, Role::sender}, {"R", 3, Role::reference}, {"X", 2, Role::ancilla}});
    QuantumState psi = random_pure_state(lay, 300 + i);
    double cond = h_min_relative(marginal_factor(psi, {"T", "R"}), reduce(psi, {"R"})).value;
    EXPECT_LE(cond, -std::log2(max_eig(reduce(psi, {"T"}).mat())) + 1e-9);
  }
}

TEST(Entropy, AdditivityOfRelativeMinEntropy) {
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    Mat r1 = random_density(4, 4, rng), s1 = random_density(2, 2, rng);
    Mat r2 = random_density(2, 2, rng), s2 = random_density(1, 1, rng);
    SystemLayout l1({{"A", 2, Role::sender}, {"B", 2, Role::reference}});
    SystemLayout l2({{"C", 2, Role::sender}, {"D", 1, Role::reference}});
    QuantumState q1 = QuantumState::mixed(l1, r1), q2 = QuantumState::mixed(l2, r2);
    QuantumState both = permute(tensor_product(q1, q2), {"A", "C", "B", "D"});
    Mat sig = kron(s1, s2);
    double joint = h_min_relative(both, QuantumState::mixed(SystemLayout({{"B", 2, Role::reference}, {"D", 1, Role::reference}}), sig)).value;
    double sep = h_min_relative(q1, QuantumState::mixed(SystemLayout({{"B", 2, Role::reference}}), s1)).value +
                 h_min_relative(q2, QuantumState::mixed(SystemLayout({{"D", 1, Role::reference}}), s2)).value;
    EXPECT_NEAR(joint, sep, 1e-8);
  }
}

TEST(Entropy, CondVonNeumannRejectsOverlap) {
  QuantumState psi = abe();
  EXPECT_THROW(cond_von_neumann(psi, {"A"}, {"A"}), LayoutError);
}

TEST(Entropy, ReportJsonHasRequiredFields) {
  QuantumState psi = abe();
  auto j = report_to_json(h_min_conditional(reduce(psi, {"A", "B"}), {"B"}));
  EXPECT_EQ(j["quantity"], "hMinCond");
  EXPECT_TRUE(j.contains("value"));
  EXPECT_TRUE(j.contains("witness"));
  EXPECT_TRUE(j.contains("status"));
}

TEST(MinCut, GhzAndProduct) {
  QuantumState g = canonical_state(Canonical::ghz, 2, {"A", "B", "C1"});
  MinCut c = min_cut_entanglement(g, "A", "B", {"C1"});
  EXPECT_NEAR(c.value, 1, 1e-9);
  EXPECT_TRUE(c.cut.empty());  // tie broken toward the smaller cut
  QuantumState p = tensor_product(canonical_state(Canonical::ghz, 1, {"A"}),
                                  canonical_state(Canonical::max_entangled, 2, {"B", "C1"}));
  EXPECT_NEAR(min_cut_entanglement(p, "A", "B", {"C1"}).value, 0, 1e-9);
}

TEST(Fannes, EtaBranchesAndContinuityBound) {
  const double e = std::exp(1.0);
  EXPECT_NEAR(fannes_eta(0.1), 0.1 - 0.1 * std::log2(0.1), 1e-14);
  EXPECT_NEAR(fannes_eta(0.9), 0.9 + std::log2(e) / e, 1e-14);
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    int d = 2 + i % 6;
    Mat a = random_density(d, d, rng), b = random_density(d, d, rng);
    Mat mix = 0.9 * a + 0.1 * b;
    double t = trace_norm_hermitian(a - mix);
    double diff = std::abs(von_neumann_spectrum(eigvalsh(a)) - von_neumann_spectrum(eigvalsh(mix)));
    EXPECT_LE(diff, fannes_eta(t) * std::log2(d) + 1e-9);
  }
}

TEST(Typicality, RankAndMassMatchEnumeration) {
  Mat rho = Mat::Zero(2, 2);
  rho(0, 0) = 0.8;
  rho(1, 1) = 0.2;
  TypicalityData t = typicality(rho, 6, 0.2);
  EXPECT_EQ(t.rank, 6);
  EXPECT_NEAR(t.mass, 0.3932160000000002, 1e-12);
  EXPECT_NEAR(t.projector().trace().real(), 6, 1e-9);
}

TEST(Typicality, OperatorInequalityMatchesDense) {
  Rng rng(2);
  for (int q = 1; q <= 3; ++q) {
    std::vector<Mat> ps;
    for (int k = 0; k < q; ++k) ps.push_back(typicality(random_density(2, 2, rng), 3, 0.3).projector());
    double fast = typicality_operator_inequality(ps);
    EXPECT_GE(fast, -1e-9);
    EXPECT_NEAR(fast, typicality_operator_inequality_dense(ps), 1e-9);
  }
}

TEST(Typicality, ScaleGuard) {
  Mat rho = Mat::Identity(4, 4) / 4.0;
  EXPECT_THROW(typicality(rho, 8, 0.1), ScaleError);
}
