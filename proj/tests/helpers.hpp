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


#pragma once

#include <cmath>
#include <complex>

#include "mergelab/state.hpp"

namespace mergelab::testing {

// Same construction as det_vector() in oracles/oracles.py.
inline Vec det_vector(long n, double a = 0.37, double b = 0.91) {
  Vec v(n);
  for (long k = 0; k < n; ++k)
    v[k] = cplx(std::cos(a * k + 0.1), std::sin(b * static_cast<double>(k) * k + 0.3));
  return v / v.norm();
}

inline QuantumState det_state(const std::vector<Subsystem>& subs) {
  SystemLayout lay(subs);
  return QuantumState::pure(lay, det_vector(lay.total_dim()));
}

// Brute-force partial trace over row-major indices.
inline Mat loop_partial_trace(const Mat& rho, const std::vector<int>& dims, const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  long total = 1, kept = 1;
  for (int d : dims) total *= d;
  for (int i : keep) kept *= dims[i];
  Mat out = Mat::Zero(kept, kept);
  auto digits = [&](long idx) {
    std::vector<int> dg(n);
    for (int i = n - 1; i >= 0; --i) {
      dg[i] = static_cast<int>(idx % dims[i]);
      idx /= dims[i];
    }
    return dg;
  };
  for (long r = 0; r < total; ++r)
    for (long c = 0; c < total; ++c) {
      auto dr = digits(r), dc = digits(c);
      bool same = true;
      for (int i = 0; i < n; ++i) {
        bool kept_i = false;
        for (int k : keep) kept_i = kept_i || k == i;
        if (!kept_i && dr[i] != dc[i]) same = false;
      }
      if (!same) continue;
      long kr = 0, kc = 0;
      for (int k : keep) {
        kr = kr * dims[k] + dr[k];
        kc = kc * dims[k] + dc[k];
      }
      out(kr, kc) += rho(r, c);
    }
  return out;
}

inline QuantumState roles(QuantumState s, const std::vector<std::pair<std::string, Role>>& rs) {
  for (const auto& [l, r] : rs) s = relabel(s, {{l, l}}, r);
  return s;
}

}  // namespace mergelab::testing
