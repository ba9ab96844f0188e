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

#include <map>
#include <string>
#include <vector>

#include "mergelab/layout.hpp"
#include "mergelab/linalg.hpp"

namespace mergelab {

enum class Kind { vector, density };

/// Density matrix or state vector over a labeled tensor-product layout.
/// Index ordering is row-major: the first subsystem is the most significant.
class QuantumState {
 public:
  QuantumState() = default;

  static QuantumState pure(SystemLayout layout, Vec amplitudes);
  static QuantumState mixed(SystemLayout layout, Mat rho);

  const SystemLayout& layout() const { return layout_; }
  Kind kind() const { return kind_; }
  bool is_vector() const { return kind_ == Kind::vector; }

  const Vec& vec() const;
  const Mat& mat() const;
  Mat density() const;
  double trace() const;

  // Throws on Hermiticity, positivity or trace violations.
  void validate(double tol = kEigTol) const;

 private:
  SystemLayout layout_;
  Kind kind_ = Kind::vector;
  Vec vec_;
  Mat mat_;
};

/// rho = F F^+ on `layout`; lets large marginals of pure states stay factored.
struct FactoredState {
  SystemLayout layout;
  Mat F;

  Mat density() const { return F * F.adjoint(); }
};

QuantumState tensor_product(const QuantumState& a, const QuantumState& b);
QuantumState permute(const QuantumState& s, const std::vector<std::string>& order);
QuantumState partial_trace(const QuantumState& s, const std::vector<std::string>& discard);
QuantumState reduce(const QuantumState& s, const std::vector<std::string>& keep);
QuantumState relabel(const QuantumState& s, const std::map<std::string, std::string>& names,
                     Role role);
QuantumState to_density(const QuantumState& s);

// Rows indexed by `rows` (joint, in the given order); columns by the remaining
// subsystems in layout order.
Mat coefficient_matrix(const QuantumState& pure, const std::vector<std::string>& rows);

FactoredState marginal_factor(const QuantumState& s, const std::vector<std::string>& keep);

// Applies `op` to the joint system `inputs`; the outputs replace the inputs at the
// position of the first input label.
QuantumState apply_local(const QuantumState& s, const std::vector<std::string>& inputs,
                         const Mat& op, const std::vector<Subsystem>& outputs);

QuantumState purify(const QuantumState& rho, const std::string& ref_label);

struct Schmidt {
  RVec coefficients;  // descending
  Mat left;           // columns
  Mat right;
};
Schmidt schmidt_decomposition(const QuantumState& psi, const std::vector<std::string>& cut);

enum class Canonical { max_entangled, max_mixed, ghz };
QuantumState canonical_state(Canonical kind, int size, const std::vector<std::string>& labels,
                             Role role = Role::ancilla);

// Spectrum of a marginal (descending, clamped).
RVec marginal_spectrum(const QuantumState& s, const std::vector<std::string>& keep);
double marginal_purity(const QuantumState& s, const std::vector<std::string>& keep);

}  // namespace mergelab
