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


#include "mergelab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "mergelab/errors.hpp"

namespace mergelab {

double log2_safe(double x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  return std::log2(x);
}

Mat hermitize(const Mat& m) { return 0.5 * (m + m.adjoint()); }

EigH eigh(const Mat& h) {
  if (h.rows() != h.cols()) throw DimensionError("eigh: matrix not square");
  if (h.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(h));
  if (es.info() != Eigen::Success) throw Error("eigh: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

RVec eigvalsh(const Mat& h) {
  if (h.rows() == 0) return RVec();
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(h), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error("eigvalsh: eigensolver failed");
  return es.eigenvalues();
}

RVec clamp_spectrum(const RVec& values, double tol) {
  RVec out = values;
  for (Eigen::Index i = 0; i < out.size(); ++i)
    if (out[i] < 0 && out[i] >= -tol) out[i] = 0;
  return out;
}

Mat psd_power(const Mat& h, double p, double cutoff) {
  EigH e = eigh(h);
  RVec w = RVec::Zero(e.values.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (e.values[i] > cutoff) w[i] = std::pow(e.values[i], p);
  return e.vectors * w.asDiagonal() * e.vectors.adjoint();
}

double max_eig(const Mat& h) {
  RVec v = eigvalsh(h);
  return v.size() ? v[v.size() - 1] : 0.0;
}

double min_eig(const Mat& h) {
  RVec v = eigvalsh(h);
  return v.size() ? v[0] : 0.0;
}

double trace_norm_hermitian(const Mat& h) { return eigvalsh(h).cwiseAbs().sum(); }

double trace_norm(const Mat& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().sum();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

Mat orthonormal_span(const Mat& cols, double tol) {
  if (cols.cols() == 0) return Mat(cols.rows(), 0);
  Eigen::ColPivHouseholderQR<Mat> qr(cols);
  qr.setThreshold(tol);
  long r = qr.rank();
  Mat q = qr.householderQ() * Mat::Identity(cols.rows(), r);
  return q;
}

double low_rank_trace_distance(const std::vector<Vec>& vs, const std::vector<double>& weights,
                               const Vec& u) {
  Mat cols(u.size(), static_cast<Eigen::Index>(vs.size()) + 1);
  for (std::size_t j = 0; j < vs.size(); ++j) cols.col(j) = vs[j];
  cols.col(vs.size()) = u;
  Mat q = orthonormal_span(cols, 1e-13);
  Mat h = Mat::Zero(q.cols(), q.cols());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    Vec c = q.adjoint() * vs[j];
    h += weights[j] * c * c.adjoint();
  }
  Vec cu = q.adjoint() * u;
  h -= cu * cu.adjoint();
  return trace_norm_hermitian(h);
}

}  // namespace mergelab
