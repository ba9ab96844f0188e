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


#include "mergelab/random.hpp"

#include <cmath>

#include "mergelab/errors.hpp"

namespace mergelab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

cplx Rng::complex_normal() {
  double re = normal();
  double im = normal();
  return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

Mat ginibre(int rows, int cols, Rng& rng) {
  Mat g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

Mat haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw DimensionError("haar_unitary: dim must be >= 1");
  Mat z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ() * Mat::Identity(dim, dim);
  const Mat& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    cplx d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= a > 0 ? d / a : cplx(1);
  }
  return q;
}

Mat haar_unitary(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(dim, rng);
}

Vec random_unit_vector(long dim, Rng& rng) {
  Vec v(dim);
  for (long i = 0; i < dim; ++i) v[i] = rng.complex_normal();
  return v / v.norm();
}

Mat random_density(int dim, int rank, Rng& rng) {
  if (rank < 1 || rank > dim) throw RankError("random_density: rank out of range");
  Mat g = ginibre(dim, rank, rng);
  Mat rho = g * g.adjoint();
  return hermitize(rho / rho.trace().real());
}

QuantumState random_pure_state(const SystemLayout& layout, std::uint64_t seed) {
  Rng rng(seed);
  return QuantumState::pure(layout, random_unit_vector(layout.total_dim(), rng));
}

}  // namespace mergelab
