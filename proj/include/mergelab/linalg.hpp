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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace mergelab {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

inline constexpr double kEigTol = 1e-10;

double log2_safe(double x);

struct EigH {
  RVec values;  // ascending
  Mat vectors;
};

Mat hermitize(const Mat& m);
EigH eigh(const Mat& h);
RVec eigvalsh(const Mat& h);

// Eigenvalues in [-kEigTol, 0) are set to zero; anything below is kept.
RVec clamp_spectrum(const RVec& values, double tol = kEigTol);

// h^p on the support of h (eigenvalues above `cutoff`), zero elsewhere.
Mat psd_power(const Mat& h, double p, double cutoff = 1e-12);

double max_eig(const Mat& h);
double min_eig(const Mat& h);
double trace_norm_hermitian(const Mat& h);
double trace_norm(const Mat& m);

Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

// Orthonormal basis (columns) of the span of the given columns.
Mat orthonormal_span(const Mat& cols, double tol = 1e-12);

// ||sum_j w_j v_j v_j^+ - u u^+||_1 computed inside span{v_j, u}.
double low_rank_trace_distance(const std::vector<Vec>& vs, const std::vector<double>& weights,
                               const Vec& u);

}  // namespace mergelab
