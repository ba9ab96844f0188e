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


#include "mergelab/typicality.hpp"

#include <cmath>
#include <limits>

#include "mergelab/errors.hpp"

namespace mergelab {

TypicalityData typicality(const Mat& rho, int n, double delta) {
  if (n < 1) throw InputError("typicality: n must be >= 1");
  if (!(delta > 0)) throw InputError("typicality: delta must be positive");
  const int d = static_cast<int>(rho.rows());
  if (n * std::log2(static_cast<double>(d)) > 14 + 1e-12)
    throw ScaleError("typicality: n log d exceeds 14");
  EigH e = eigh(rho);
  TypicalityData out;
  out.n = n;
  out.delta = delta;
  out.d = d;
  out.probabilities = clamp_spectrum(e.values);
  out.basis = e.vectors;
  double S = 0;
  for (int i = 0; i < d; ++i) {
    double p = out.probabilities[i];
    if (p > 0) S -= p * std::log2(p);
  }
  out.entropy = S;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= d;
  out.typical.assign(total, 0);
  std::vector<int> digit(n, 0);
  for (long s = 0; s < total; ++s) {
    double logp = 0;
    double p = 1;
    for (int i = 0; i < n; ++i) {
      double q = out.probabilities[digit[i]];
      p *= q;
      logp += q > 0 ? std::log2(q) : -std::numeric_limits<double>::infinity();
    }
    if (std::isfinite(logp) && std::abs(-logp / n - S) <= delta) {
      out.typical[s] = 1;
      ++out.rank;
      out.mass += p;
    }
    for (int i = n - 1; i >= 0; --i) {
      if (++digit[i] < d) break;
      digit[i] = 0;
    }
  }
  return out;
}

Mat TypicalityData::projector() const {
  long total = static_cast<long>(typical.size());
  if (total > 4096) throw ScaleError("typicality: dense projector too large");
  Mat B = Mat::Identity(1, 1);
  for (int i = 0; i < n; ++i) B = kron(B, basis);
  Mat P = Mat::Zero(total, total);
  for (long s = 0; s < total; ++s)
    if (typical[s]) P += B.col(s) * B.col(s).adjoint();
  return P;
}

double typicality_operator_inequality(const std::vector<Mat>& projectors) {
  const int q = static_cast<int>(projectors.size());
  if (q == 0) return 0;
  std::vector<double> lo(q), hi(q);
  for (int k = 0; k < q; ++k) {
    RVec v = eigvalsh(projectors[k]);
    lo[k] = v[0];
    hi[k] = v[v.size() - 1];
  }
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << q); ++mask) {
    double prod = 1, sum = 0;
    for (int k = 0; k < q; ++k) {
      double b = (mask >> k) & 1u ? hi[k] : lo[k];
      prod *= b;
      sum += b;
    }
    best = std::min(best, prod - sum + (q - 1));
  }
  return best;
}

double typicality_operator_inequality_dense(const std::vector<Mat>& projectors) {
  const int q = static_cast<int>(projectors.size());
  std::vector<long> dims(q);
  long D = 1;
  for (int k = 0; k < q; ++k) {
    dims[k] = projectors[k].rows();
    D *= dims[k];
  }
  if (D > 4096) throw ScaleError("typicality: dense operator too large");
  Mat prod = Mat::Identity(1, 1);
  for (const auto& p : projectors) prod = kron(prod, p);
  Mat sum = Mat::Zero(D, D);
  for (int k = 0; k < q; ++k) {
    Mat term = Mat::Identity(1, 1);
    for (int j = 0; j < q; ++j)
      term = kron(term, j == k ? projectors[j] : Mat(Mat::Identity(dims[j], dims[j])));
    sum += term;
  }
  return min_eig(prod - sum + (q - 1) * Mat::Identity(D, D));
}

}  // namespace mergelab
