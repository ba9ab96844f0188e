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
#include <limits>

#include "mergelab/entropy.hpp"
#include "mergelab/errors.hpp"

namespace mergelab {
namespace {

void check_spectrum(const std::vector<double>& r, double eps) {
  if (!(eps > 0 && eps < 1)) throw InputError("smoothing parameter must lie in (0, 1)");
  double sum = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0) throw InputError("spectrum has a negative entry");
    if (i > 0 && r[i] > r[i - 1] + 1e-15) throw InputError("spectrum must be sorted descending");
    sum += r[i];
  }
  if (sum > 1 + 1e-9) throw NormalizationError("spectrum sums to more than 1");
}

std::vector<double> tails(const std::vector<double>& r) {
  std::vector<double> t(r.size() + 1, 0.0);
  for (std::size_t i = r.size(); i-- > 0;) t[i] = t[i + 1] + r[i];
  return t;  // t[i] = sum_{j >= i} r_j, zero-based
}

}  // namespace

Truncation smooth_h_max_truncation(const std::vector<double>& spectrum, double eps) {
  check_spectrum(spectrum, eps);
  const double delta = eps * eps / 2;
  std::vector<double> t = tails(spectrum);
  Truncation best;
  best.lower_bound_bits = std::numeric_limits<double>::infinity();
  best.k = static_cast<int>(spectrum.size());
  double prefix = 0;  // sum_{j<k} sqrt(r_j)
  double square = 0;  // prefix^2
  for (std::size_t k = 1; k <= spectrum.size(); ++k) {
    if (t[k] <= delta + 1e-15) {
      double v = log2_safe(square);
      if (v < best.lower_bound_bits) {
        best.lower_bound_bits = v;
        best.k = static_cast<int>(k);
      }
    }
    square += spectrum[k - 1] + 2 * prefix * std::sqrt(spectrum[k - 1]);
    prefix += std::sqrt(spectrum[k - 1]);
  }
  return best;
}

double smooth_h_max_oracle(const std::vector<double>& spectrum, double eps) {
  check_spectrum(spectrum, eps);
  const double delta = eps * eps / 2;
  std::vector<double> t = tails(spectrum);
  double best = std::numeric_limits<double>::infinity();
  double prefix = 0;
  double square = 0;
  for (std::size_t j0 = 0; j0 < spectrum.size(); ++j0) {
    double tail_after = t[j0 + 1];
    if (tail_after <= delta + 1e-15) {
      double x = std::max(0.0, spectrum[j0] - (delta - tail_after));
      best = std::min(best, log2_safe(square + x + 2 * prefix * std::sqrt(x)));
    }
    square += spectrum[j0] + 2 * prefix * std::sqrt(spectrum[j0]);
    prefix += std::sqrt(spectrum[j0]);
  }
  return best;
}

double fannes_eta(double x) {
  const double e = std::exp(1.0);
  if (x <= 0) return 0;
  if (x <= 1 / e) return x - x * std::log2(x);
  return x + std::log2(e) / e;
}

}  // namespace mergelab
