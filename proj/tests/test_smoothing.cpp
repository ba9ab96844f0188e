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

#include <algorithm>
#include <cmath>
#include <random>

#include "mergelab/entropy.hpp"
#include "mergelab/errors.hpp"

using namespace mergelab;

TEST(Smoothing, TruncationOracleValues) {
  Truncation a = smooth_h_max_truncation({0.4, 0.3, 0.2, 0.1}, 0.5);
  EXPECT_NEAR(a.lower_bound_bits, 0.47800915901862073, 1e-12);
  EXPECT_EQ(a.k, 3);
  Truncation b = smooth_h_max_truncation({0.7, 0.1, 0.1, 0.05, 0.05}, 0.4);
  EXPECT_NEAR(b.lower_bound_bits, 1.109895761448891, 1e-12);
  EXPECT_EQ(b.k, 4);
}

TEST(Smoothing, HalfQuarterQuarterIsExactlyMinusOne) {
  Truncation t = smooth_h_max_truncation({0.5, 0.25, 0.25}, std::sqrt(0.5));
  EXPECT_EQ(t.lower_bound_bits, -1.0);
  EXPECT_EQ(t.k, 2);
}

TEST(Smoothing, PointMassEdgeCases) {
  EXPECT_EQ(smooth_h_max_truncation({1.0}, 0.5).lower_bound_bits, -INFINITY);
  EXPECT_NEAR(smooth_h_max_oracle({1.0}, 0.5), std::log2(1 - 0.125), 1e-14);
}

TEST(Smoothing, OrderedBetweenTruncationAndHMax) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> r(1 + i % 16);
    double s = 0;
    for (auto& x : r) s += (x = -std::log(u(rng)));
    for (auto& x : r) x /= s;
    std::sort(r.rbegin(), r.rend());
    double eps = 0.05 + 0.9 * u(rng);
    double t = smooth_h_max_truncation(r, eps).lower_bound_bits;
    double o = smooth_h_max_oracle(r, eps);
    double full = h_max_spectrum(Eigen::Map<RVec>(r.data(), r.size()));
    EXPECT_LE(t, o + 1e-12);
    EXPECT_LE(o, full + 1e-12);
  }
}

TEST(Smoothing, MonotoneInEpsilon) {
  std::vector<double> r{0.3, 0.25, 0.2, 0.15, 0.1};
  double prev = INFINITY;
  for (double eps = 0.05; eps < 1; eps += 0.05) {
    double v = smooth_h_max_truncation(r, eps).lower_bound_bits;
    EXPECT_LE(v, prev + 1e-12);
    prev = v;
  }
}

TEST(Smoothing, RejectsBadInput) {
  EXPECT_THROW(smooth_h_max_truncation({0.5, 0.5}, 0.0), InputError);
  EXPECT_THROW(smooth_h_max_truncation({0.5, 0.5}, 1.0), InputError);
  EXPECT_THROW(smooth_h_max_truncation({0.2, 0.8}, 0.3), InputError);
  EXPECT_THROW(smooth_h_max_truncation({0.9, 0.8}, 0.3), NormalizationError);
}
