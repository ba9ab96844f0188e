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

#include <cstdlib>

#include "mergelab/random.hpp"
#include "mergelab/sweep.hpp"

using namespace mergelab;

namespace {

QuantumState small_state() {
  SystemLayout lay({{"C1", 2, Role::sender}, {"C2", 2, Role::sender}, {"B", 2, Role::receiverB},
                    {"R", 2, Role::reference}});
  return random_pure_state(lay, 77);
}

}  // namespace

TEST(Sweep, ParallelMatchesSerialBitForBit) {
  QuantumState psi = small_state();
  SweepConfig cfg{{1, 2}, {2, 2}, 11, 12};
  auto a = sweep_merging_ref(psi, cfg);
  auto b = sweep_merging(psi, cfg);
  ASSERT_EQ(a.size(), 12u);
  ASSERT_EQ(b.size(), 12u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].seed, b[i].seed);
    EXPECT_EQ(a[i].seed, sweep_seed(11, static_cast<int>(i)));
    EXPECT_EQ(a[i].q_error, b[i].q_error);
    EXPECT_EQ(a[i].end_to_end_error, b[i].end_to_end_error);
    EXPECT_EQ(a[i].lemma3_lhs, b[i].lemma3_lhs);
  }
  auto l1 = sweep_lemma3_ref(psi, cfg);
  auto l2 = sweep_lemma3(psi, cfg);
  for (std::size_t i = 0; i < l1.size(); ++i) {
    EXPECT_EQ(l1[i].lhs, l2[i].lhs);
    EXPECT_EQ(l1[i].rhs, l2[i].rhs);
  }
}

TEST(Sweep, SeedsAreDistinct) {
  EXPECT_NE(sweep_seed(1, 0), sweep_seed(1, 1));
  EXPECT_NE(sweep_seed(1, 0), sweep_seed(2, 0));
}

TEST(Sweep, ThreadCapFromEnvironment) {
  setenv("MERGELAB_THREADS", "1", 1);
  EXPECT_EQ(sweep_threads(), 1);
  QuantumState psi = small_state();
  SweepConfig cfg{{1, 1}, {2, 2}, 5, 4};
  auto a = sweep_merging(psi, cfg);
  unsetenv("MERGELAB_THREADS");
  auto b = sweep_merging(psi, cfg);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].q_error, b[i].q_error);
  EXPECT_GE(sweep_threads(), 1);
}

TEST(Sweep, ErrorsPropagateOutOfParallelRegion) {
  QuantumState psi = small_state();
  SweepConfig cfg{{1}, {2}, 5, 4};
  EXPECT_ANY_THROW(sweep_merging(psi, cfg));
}
