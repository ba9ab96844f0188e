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


#include "mergelab/closeness.hpp"

#include <algorithm>
#include <cmath>

#include "mergelab/errors.hpp"

namespace mergelab {

double fidelity(const Mat& rho, const Mat& sigma) {
  if (rho.rows() != sigma.rows()) throw DimensionError("fidelity: size mismatch");
  // Tr sqrt(sqrt(rho) sigma sqrt(rho)) = || sqrt(rho) sqrt(sigma) ||_1
  Mat prod = psd_power(rho, 0.5, 1e-14) * psd_power(sigma, 0.5, 1e-14);
  return Eigen::JacobiSVD<Mat>(prod).singularValues().sum();
}

double generalized_fidelity(const Mat& rho, const Mat& sigma) {
  double a = std::max(0.0, 1 - rho.trace().real());
  double b = std::max(0.0, 1 - sigma.trace().real());
  return fidelity(rho, sigma) + std::sqrt(a * b);
}

double purified_distance(const Mat& rho, const Mat& sigma) {
  double f = std::min(1.0, generalized_fidelity(rho, sigma));
  return std::sqrt(std::max(0.0, 1 - f * f));
}

Closeness closeness(const Mat& rho, const Mat& sigma) {
  Closeness c;
  c.fidelity = fidelity(rho, sigma);
  c.trace_distance = 0.5 * trace_norm_hermitian(rho - sigma);
  double f = std::min(1.0, c.fidelity + std::sqrt(std::max(0.0, 1 - rho.trace().real()) *
                                                  std::max(0.0, 1 - sigma.trace().real())));
  c.purified_distance = std::sqrt(std::max(0.0, 1 - f * f));
  return c;
}

Closeness closeness(const QuantumState& rho, const QuantumState& sigma) {
  if (!(rho.layout() == sigma.layout())) throw LayoutError("closeness: layout mismatch");
  return closeness(rho.density(), sigma.density());
}

bool PartialIsometry::is_valid(double tol) const {
  if (matrix.rows() <= matrix.cols()) {
    Mat g = matrix * matrix.adjoint();
    return (g - Mat::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= tol;
  }
  Mat g = matrix.adjoint() * matrix;
  return (g - Mat::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= tol;
}

Mat uhlmann_from_coefficients(const Mat& psi_coeff, const Mat& phi_coeff) {
  if (psi_coeff.rows() != phi_coeff.rows())
    throw DimensionError("uhlmann: fixed systems differ in dimension");
  if (phi_coeff.cols() < psi_coeff.cols())
    throw DimensionError("uhlmann: target system too small to host the input");
  Mat a = psi_coeff.transpose() * phi_coeff.conjugate();
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixV() * svd.matrixU().adjoint();
}

namespace {

std::string join(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l;
  return out;
}

}  // namespace

PartialIsometry uhlmann_isometry(const QuantumState& psi, const QuantumState& phi,
                                 const std::vector<std::string>& movable) {
  if (!psi.is_vector() || !phi.is_vector()) throw KindError("uhlmann_isometry expects pure states");
  std::vector<std::string> fixed = psi.layout().complement(movable);
  for (const auto& l : fixed)
    if (!phi.layout().has(l) || phi.layout().dim(l) != psi.layout().dim(l))
      throw LayoutError("uhlmann_isometry: fixed system '" + l + "' missing from target");
  std::vector<std::string> out_labels = phi.layout().complement(fixed);
  PartialIsometry iso;
  iso.input_label = join(movable);
  iso.output_label = join(out_labels);
  iso.matrix = uhlmann_from_coefficients(coefficient_matrix(psi, fixed), coefficient_matrix(phi, fixed));
  iso.rank = static_cast<int>(iso.matrix.cols());
  return iso;
}

QuantumState apply_uhlmann(const QuantumState& psi, const QuantumState& phi,
                           const std::vector<std::string>& movable, const Mat& V) {
  std::vector<std::string> fixed = psi.layout().complement(movable);
  std::vector<std::string> out_labels = phi.layout().complement(fixed);
  Mat c = coefficient_matrix(psi, fixed) * V.transpose();
  std::vector<Subsystem> subs;
  for (const auto& l : fixed) subs.push_back(psi.layout()[psi.layout().index_of(l)]);
  for (const auto& l : out_labels) subs.push_back(phi.layout()[phi.layout().index_of(l)]);
  SystemLayout mid(subs);
  Vec v(c.size());
  for (long i = 0; i < c.rows(); ++i)
    for (long j = 0; j < c.cols(); ++j) v[i * c.cols() + j] = c(i, j);
  return permute(QuantumState::pure(mid, v), phi.layout().labels());
}

}  // namespace mergelab
