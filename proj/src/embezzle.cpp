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

#include "mergelab/embezzle.hpp"
#include "mergelab/errors.hpp"

namespace mergelab {
namespace {

void check(const EmbezzleParams& p) {
  if (p.d < 1) throw InputError("embezzling dimension must be positive");
  if (!(p.alpha >= 0 && p.alpha <= 1)) throw InputError("alpha must lie in [0,1]");
  if (p.family == Family::orthonormal && p.alpha != 0) throw InputError("orthonormal family has alpha = 0");
}

double inv_sqrt_sum(int n) {
  double s = 0;
  for (int j = n; j >= 1; --j) s += 1 / std::sqrt(static_cast<double>(j));
  return s;
}

}  // namespace

double harmonic(int d) {
  double s = 0;
  for (int j = d; j >= 1; --j) s += 1.0 / j;
  return s;
}

double smoothing_delta(const EmbezzleParams& p) {
  return p.delta > 0 ? p.delta : p.epsilon * p.epsilon / 256;
}

std::vector<double> embezzle_spectrum(int d) {
  const double h = harmonic(d);
  std::vector<double> out(d);
  for (int j = 1; j <= d; ++j) out[j - 1] = 1 / (j * h);
  return out;
}

Mat embezzle_gram(const EmbezzleParams& p) {
  check(p);
  Mat g = Mat::Identity(p.d, p.d);
  if (p.family == Family::common_tilt) g = (1 - p.alpha) * g + p.alpha * Mat::Ones(p.d, p.d);
  return g;
}

QuantumState build_embezzling(const EmbezzleParams& p) {
  check(p);
  const int d = p.d;
  const int dc2 = p.family == Family::common_tilt ? d + 1 : d;
  const long total = static_cast<long>(d) * dc2 * d;
  if (total > (1L << 22)) throw ScaleError("embezzling state too large to build explicitly");
  SystemLayout layout({{"C1", d, Role::sender}, {"C2", dc2, Role::sender}, {"R", d, Role::reference}});
  Vec v = Vec::Zero(total);
  const auto r = embezzle_spectrum(d);
  auto at = [&](int c1, int c2, int rr) { return (static_cast<long>(c1) * dc2 + c2) * d + rr; };
  for (int j = 0; j < d; ++j) {
    const double a = std::sqrt(r[j]);
    if (p.family == Family::orthonormal) {
      v[at(j, j, j)] = a;
    } else {
      v[at(j, j + 1, j)] += a * std::sqrt(1 - p.alpha);
      v[at(j, 0, j)] += a * std::sqrt(p.alpha);
    }
  }
  return QuantumState::pure(layout, v);
}

Gershgorin gershgorin_bound(const EmbezzleParams& p) {
  check(p);
  Gershgorin g;
  g.lambda_bound = 2 * p.alpha * p.d + 1;
  g.hmin_upper = std::log2(g.lambda_bound);
  // psi^{C1R} is maximally correlated, so the sandwiched operator is the Gram matrix.
  double lam = p.family == Family::common_tilt ? 1 + p.alpha * (p.d - 1) : 1.0;
  if (p.d <= 512) lam = max_eig(embezzle_gram(p));
  g.hmin_exact = std::log2(lam);
  g.eig_margin = g.lambda_bound - lam;
  return g;
}

SingletFraction singlet_fraction(const EmbezzleParams& p) {
  check(p);
  SingletFraction s;
  const double sum = inv_sqrt_sum(p.d);
  s.aligned_overlap = sum * sum / (p.d * harmonic(p.d));
  const double ld = std::log2(static_cast<double>(p.d));
  s.lower_5_over_logd = p.d >= 2 ? 5 / ld : INFINITY;
  s.hmin_lower = p.d >= 2 ? ld - std::log2(ld) + 2 : -INFINITY;
  s.claim_holds = s.aligned_overlap >= s.lower_5_over_logd;
  return s;
}

int singlet_threshold(int d_max) {
  int d0 = d_max + 1;
  for (int d = d_max; d >= 2; --d) {
    EmbezzleParams p;
    p.d = d;
    if (!singlet_fraction(p).claim_holds) break;
    d0 = d;
  }
  return d0;
}

SmoothingEstimate smoothing_estimate(const EmbezzleParams& p) {
  check(p);
  SmoothingEstimate s;
  s.delta = smoothing_delta(p);
  if (!(s.delta > 0 && s.delta < 1)) throw InputError("smoothing parameter must lie in (0,1)");
  const double allowed = s.delta * s.delta / 2;
  const double h = harmonic(p.d);
  s.k_threshold = std::pow(p.d + 1.0, 1 - allowed) / std::exp(1.0);

  // Smallest k whose tail beyond k fits in delta^2/2; the bound keeps j = 1..k-1.
  double tail = 0;
  int k = p.d;
  for (int j = p.d; j >= 1; --j) {
    if (tail + 1 / (j * h) > allowed) break;
    tail += 1 / (j * h);
    k = j - 1;
  }
  if (k < 1) k = 1;
  double head = 0;
  for (int j = k - 1; j >= 1; --j) head += 1 / std::sqrt(j * h);
  s.k = k;
  s.tail = 1 - harmonic(k) / h;
  s.bound_bits = 2 * log2_safe(head);

  const int kt = static_cast<int>(std::floor(s.k_threshold));
  s.tail_condition_fails = kt < 1 || (1 - harmonic(kt) / h > allowed);
  return s;
}

CostComparison cost_comparison(const EmbezzleParams& p) {
  check(p);
  if (p.d < 2) throw InputError("cost comparison needs d >= 2");
  if (!(p.epsilon > 0 && p.epsilon < 1)) throw InputError("epsilon must lie in (0,1)");
  CostComparison c;
  const double ld = std::log2(static_cast<double>(p.d));
  const double e4 = 4 * std::log2(1 / p.epsilon);
  const double ad = p.alpha * p.d;
  c.e1_min = ad >= 1 ? std::log2(ad) + e4 + 14 : std::log2(2 * ad + 1) + e4 + 12;
  c.e2_min = e4 + 12;
  c.thm4_sum = ld + e4 + 12;
  c.prop5_lower = ld - std::log2(ld) + 26 + 8 * std::log2(2 / p.epsilon);
  const double eps4 = std::pow(p.epsilon, 4);
  c.prop5_smoothed = (1 - eps4 / 512) * std::log2(p.d + 1.0) - std::log2(ld) + 24 + 8 * std::log2(2 / p.epsilon);
  c.smoothing_savings = eps4 * std::log2(p.d + 1.0) / 512;
  c.difference = c.prop5_lower - c.thm4_sum;
  c.thm4_below = c.thm4_sum < c.prop5_lower;
  return c;
}

double embezzle_hmax(int d) {
  if (d < 1) throw InputError("embezzling dimension must be positive");
  const double h = harmonic(d);
  double s = 0;
  for (int j = d; j >= 1; --j) s += 1 / std::sqrt(j * h);
  return 2 * std::log2(s);
}

EmbezzleRow embezzle_row(const EmbezzleParams& p) {
  EmbezzleRow row;
  row.d = p.d;
  row.alpha = p.alpha;
  row.eps = p.epsilon;
  Gershgorin g = gershgorin_bound(p);
  row.hmin_exact = g.hmin_exact;
  row.gersh_bound = g.hmin_upper;
  row.singlet = singlet_fraction(p).aligned_overlap;
  row.hmax = embezzle_hmax(p.d);
  row.smooth_bound = smoothing_estimate(p).bound_bits;
  if (p.d >= 2) {
    CostComparison c = cost_comparison(p);
    row.thm4_sum = c.thm4_sum;
    row.prop5_lower = c.prop5_lower;
  }
  return row;
}

}  // namespace mergelab
