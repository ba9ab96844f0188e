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


#include "mergelab/state.hpp"

#include <algorithm>
#include <cmath>

#include "detail.hpp"
#include "mergelab/errors.hpp"

namespace mergelab {
namespace detail {

std::vector<long> index_map(const std::vector<int>& dims, const std::vector<int>& perm) {
  const int n = static_cast<int>(dims.size());
  std::vector<long> old_stride(n, 1);
  for (int k = n - 2; k >= 0; --k) old_stride[k] = old_stride[k + 1] * dims[k + 1];
  long total = 1;
  for (int d : dims) total *= d;
  std::vector<int> new_dims(n);
  std::vector<long> stride(n);
  for (int k = 0; k < n; ++k) {
    new_dims[k] = dims[perm[k]];
    stride[k] = old_stride[perm[k]];
  }
  std::vector<long> out(total);
  std::vector<int> digit(n, 0);
  long old = 0;
  for (long i = 0; i < total; ++i) {
    out[i] = old;
    for (int k = n - 1; k >= 0; --k) {
      if (++digit[k] < new_dims[k]) {
        old += stride[k];
        break;
      }
      old -= stride[k] * (new_dims[k] - 1);
      digit[k] = 0;
    }
  }
  return out;
}

}  // namespace detail

namespace {

using detail::index_map;

std::vector<int> perm_for(const SystemLayout& layout, const std::vector<std::string>& order) {
  std::vector<int> perm;
  for (const auto& l : order) perm.push_back(layout.index_of(l));
  return perm;
}

bool is_identity(const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

void require_labels(const SystemLayout& layout, const std::vector<std::string>& labels) {
  for (const auto& l : labels)
    if (!layout.has(l)) throw LayoutError("unknown label '" + l + "'");
}

}  // namespace

QuantumState QuantumState::pure(SystemLayout layout, Vec amplitudes) {
  if (amplitudes.size() != layout.total_dim())
    throw DimensionError("vector size does not match layout dimension");
  QuantumState s;
  s.layout_ = std::move(layout);
  s.kind_ = Kind::vector;
  s.vec_ = std::move(amplitudes);
  return s;
}

QuantumState QuantumState::mixed(SystemLayout layout, Mat rho) {
  if (rho.rows() != layout.total_dim() || rho.cols() != rho.rows())
    throw DimensionError("density size does not match layout dimension");
  QuantumState s;
  s.layout_ = std::move(layout);
  s.kind_ = Kind::density;
  s.mat_ = std::move(rho);
  return s;
}

const Vec& QuantumState::vec() const {
  if (kind_ != Kind::vector) throw KindError("state is not a vector");
  return vec_;
}

const Mat& QuantumState::mat() const {
  if (kind_ != Kind::density) throw KindError("state is not a density matrix");
  return mat_;
}

Mat QuantumState::density() const {
  if (kind_ == Kind::density) return mat_;
  return vec_ * vec_.adjoint();
}

double QuantumState::trace() const {
  if (kind_ == Kind::vector) return vec_.squaredNorm();
  return mat_.trace().real();
}

void QuantumState::validate(double tol) const {
  double t = trace();
  if (!(t > 0) || t > 1 + tol) throw NormalizationError("trace outside (0, 1]");
  if (kind_ == Kind::vector) return;
  if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw NormalizationError("density matrix not Hermitian");
  if (min_eig(mat_) < -tol) throw NormalizationError("density matrix not positive");
}

QuantumState tensor_product(const QuantumState& a, const QuantumState& b) {
  SystemLayout layout = a.layout().concat(b.layout());
  if (a.is_vector() && b.is_vector()) return QuantumState::pure(layout, kron(a.vec(), b.vec()));
  return QuantumState::mixed(layout, kron(a.density(), b.density()));
}

QuantumState permute(const QuantumState& s, const std::vector<std::string>& order) {
  const SystemLayout& layout = s.layout();
  if (order.size() != layout.size()) throw LayoutError("permute: order must list every label");
  std::vector<int> perm = perm_for(layout, order);
  {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i)) throw LayoutError("permute: repeated label");
  }
  SystemLayout out_layout = layout.select(order);
  if (is_identity(perm)) return s;
  std::vector<long> map = index_map(layout.dims(), perm);
  const long D = static_cast<long>(map.size());
  if (s.is_vector()) {
    const Vec& v = s.vec();
    Vec out(D);
    for (long i = 0; i < D; ++i) out[i] = v[map[i]];
    return QuantumState::pure(out_layout, out);
  }
  const Mat& m = s.mat();
  Mat out(D, D);
  for (long j = 0; j < D; ++j)
    for (long i = 0; i < D; ++i) out(i, j) = m(map[i], map[j]);
  return QuantumState::mixed(out_layout, out);
}

Mat coefficient_matrix(const QuantumState& pure, const std::vector<std::string>& rows) {
  const SystemLayout& layout = pure.layout();
  require_labels(layout, rows);
  std::vector<std::string> order = rows;
  std::vector<std::string> rest = layout.complement(rows);
  order.insert(order.end(), rest.begin(), rest.end());
  QuantumState p = permute(pure, order);
  const long dr = layout.dim_of(rows);
  const long dc = layout.dim_of(rest);
  const Vec& v = p.vec();
  Mat out(dr, dc);
  for (long i = 0; i < dr; ++i)
    for (long j = 0; j < dc; ++j) out(i, j) = v[i * dc + j];
  return out;
}

QuantumState partial_trace(const QuantumState& s, const std::vector<std::string>& discard) {
  const SystemLayout& layout = s.layout();
  require_labels(layout, discard);
  std::vector<std::string> keep = layout.complement(discard);
  if (keep.empty()) throw LayoutError("partial_trace: cannot discard every label");
  if (discard.empty()) return s;
  SystemLayout out_layout = layout.select(keep);
  if (s.is_vector()) {
    Mat c = coefficient_matrix(s, keep);
    return QuantumState::mixed(out_layout, c * c.adjoint());
  }
  std::vector<std::string> order = keep;
  order.insert(order.end(), discard.begin(), discard.end());
  QuantumState p = permute(s, order);
  const long dk = layout.dim_of(keep);
  const long dd = layout.dim_of(discard);
  const Mat& m = p.mat();
  Mat out = Mat::Zero(dk, dk);
  for (long j = 0; j < dk; ++j)
    for (long i = 0; i < dk; ++i) {
      cplx acc = 0;
      for (long k = 0; k < dd; ++k) acc += m(i * dd + k, j * dd + k);
      out(i, j) = acc;
    }
  return QuantumState::mixed(out_layout, out);
}

QuantumState reduce(const QuantumState& s, const std::vector<std::string>& keep) {
  require_labels(s.layout(), keep);
  QuantumState r = partial_trace(s, s.layout().complement(keep));
  if (r.is_vector()) r = to_density(r);
  return permute(r, keep);
}

QuantumState relabel(const QuantumState& s, const std::map<std::string, std::string>& names,
                     Role role) {
  std::vector<Subsystem> subs = s.layout().subsystems();
  for (const auto& [from, to] : names) {
    bool found = false;
    for (auto& sub : subs)
      if (sub.label == from) {
        sub.label = to;
        sub.role = role;
        found = true;
      }
    if (!found) throw LayoutError("relabel: unknown label '" + from + "'");
  }
  SystemLayout layout(subs);
  if (s.is_vector()) return QuantumState::pure(layout, s.vec());
  return QuantumState::mixed(layout, s.mat());
}

QuantumState to_density(const QuantumState& s) {
  if (!s.is_vector()) return s;
  return QuantumState::mixed(s.layout(), s.density());
}

FactoredState marginal_factor(const QuantumState& s, const std::vector<std::string>& keep) {
  require_labels(s.layout(), keep);
  SystemLayout layout = s.layout().select(keep);
  if (s.is_vector()) {
    Mat c = coefficient_matrix(s, keep);
    if (c.cols() <= c.rows()) return {layout, c};
    Mat g = c * c.adjoint();
    EigH e = eigh(g);
    long rank = 0;
    for (Eigen::Index i = 0; i < e.values.size(); ++i)
      if (e.values[i] > 1e-15) ++rank;
    Mat f(c.rows(), rank);
    long col = 0;
    for (Eigen::Index i = e.values.size() - 1; i >= 0 && col < rank; --i)
      if (e.values[i] > 1e-15) f.col(col++) = std::sqrt(e.values[i]) * e.vectors.col(i);
    return {layout, f};
  }
  QuantumState r = reduce(s, keep);
  EigH e = eigh(r.mat());
  long rank = 0;
  for (Eigen::Index i = 0; i < e.values.size(); ++i)
    if (e.values[i] > 1e-15) ++rank;
  Mat f(e.vectors.rows(), rank);
  long col = 0;
  for (Eigen::Index i = e.values.size() - 1; i >= 0 && col < rank; --i)
    if (e.values[i] > 1e-15) f.col(col++) = std::sqrt(e.values[i]) * e.vectors.col(i);
  return {layout, f};
}

QuantumState apply_local(const QuantumState& s, const std::vector<std::string>& inputs,
                         const Mat& op, const std::vector<Subsystem>& outputs) {
  const SystemLayout& layout = s.layout();
  require_labels(layout, inputs);
  if (inputs.empty()) throw LayoutError("apply_local: no input systems");
  const long din = layout.dim_of(inputs);
  long dout = 1;
  for (const auto& o : outputs) dout *= o.dim;
  if (op.cols() != din || op.rows() != dout) throw DimensionError("apply_local: operator shape");

  std::vector<std::string> rest = layout.complement(inputs);
  std::vector<std::string> order = inputs;
  order.insert(order.end(), rest.begin(), rest.end());
  QuantumState p = permute(s, order);
  const long dr = layout.dim_of(rest);

  std::vector<Subsystem> subs(outputs.begin(), outputs.end());
  for (const auto& l : rest) subs.push_back(layout[layout.index_of(l)]);
  SystemLayout mid(subs);

  QuantumState applied;
  if (p.is_vector()) {
    const Vec& v = p.vec();
    Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> c(
        v.data(), din, dr);
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> oc = op * c;
    Vec out = Eigen::Map<const Vec>(oc.data(), dout * dr);
    applied = QuantumState::pure(mid, out);
  } else {
    const Mat& m = p.mat();
    const long D = din * dr;
    Mat left = Mat::Zero(dout * dr, D);
    for (long a = 0; a < dout; ++a)
      for (long i = 0; i < din; ++i)
        if (op(a, i) != cplx(0)) left.middleRows(a * dr, dr) += op(a, i) * m.middleRows(i * dr, dr);
    Mat out = Mat::Zero(dout * dr, dout * dr);
    Mat opc = op.conjugate();
    for (long b = 0; b < dout; ++b)
      for (long j = 0; j < din; ++j)
        if (opc(b, j) != cplx(0)) out.middleCols(b * dr, dr) += opc(b, j) * left.middleCols(j * dr, dr);
    applied = QuantumState::mixed(mid, out);
  }

  // Outputs go where the first input sat, relative to the untouched systems.
  const int first = layout.index_of(inputs.front());
  std::vector<std::string> final_order;
  bool placed = false;
  for (const auto& sub : layout.subsystems()) {
    bool is_input = std::find(inputs.begin(), inputs.end(), sub.label) != inputs.end();
    if (layout.index_of(sub.label) == first && !placed) {
      for (const auto& o : outputs) final_order.push_back(o.label);
      placed = true;
    }
    if (!is_input) final_order.push_back(sub.label);
  }
  return permute(applied, final_order);
}

QuantumState purify(const QuantumState& rho, const std::string& ref_label) {
  if (rho.is_vector()) throw KindError("purify expects a density matrix");
  if (std::abs(rho.trace() - 1) > 1e-10) throw NormalizationError("purify: trace must be 1");
  EigH e = eigh(rho.mat());
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = e.values.size() - 1; i >= 0; --i)
    if (e.values[i] > kEigTol) support.push_back(i);
  const long r = std::max<long>(1, static_cast<long>(support.size()));
  std::vector<Subsystem> subs = rho.layout().subsystems();
  subs.push_back({ref_label, static_cast<int>(r), Role::reference});
  SystemLayout layout(subs);
  const long d = rho.mat().rows();
  Vec psi = Vec::Zero(d * r);
  for (std::size_t k = 0; k < support.size(); ++k) {
    Vec v = std::sqrt(e.values[support[k]]) * e.vectors.col(support[k]);
    for (long i = 0; i < d; ++i) psi[i * r + static_cast<long>(k)] = v[i];
  }
  psi /= psi.norm();
  return QuantumState::pure(layout, psi);
}

Schmidt schmidt_decomposition(const QuantumState& psi, const std::vector<std::string>& cut) {
  if (!psi.is_vector()) throw KindError("schmidt_decomposition expects a pure state");
  Mat c = coefficient_matrix(psi, cut);
  Eigen::BDCSVD<Mat> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVec& s = svd.singularValues();
  const double top = s.size() ? s[0] : 0.0;
  long n = 0;
  while (n < s.size() && s[n] > 1e-12 * std::max(top, 1e-300)) ++n;
  Schmidt out;
  out.coefficients = s.head(n);
  out.left = svd.matrixU().leftCols(n);
  out.right = svd.matrixV().leftCols(n).conjugate();
  return out;
}

QuantumState canonical_state(Canonical kind, int size, const std::vector<std::string>& labels,
                             Role role) {
  if (size < 1) throw DimensionError("canonical_state: size must be >= 1");
  std::vector<Subsystem> subs;
  for (const auto& l : labels) subs.push_back({l, size, role});
  SystemLayout layout(subs);
  switch (kind) {
    case Canonical::max_entangled: {
      if (labels.size() != 2) throw LayoutError("max_entangled needs two labels");
      Vec v = Vec::Zero(static_cast<long>(size) * size);
      for (int k = 0; k < size; ++k) v[static_cast<long>(k) * size + k] = 1.0 / std::sqrt(size);
      return QuantumState::pure(layout, v);
    }
    case Canonical::max_mixed: {
      if (labels.size() != 1) throw LayoutError("max_mixed needs one label");
      return QuantumState::mixed(layout, Mat::Identity(size, size) / static_cast<double>(size));
    }
    case Canonical::ghz: {
      if (labels.empty()) throw LayoutError("ghz needs at least one label");
      const long D = layout.total_dim();
      Vec v = Vec::Zero(D);
      long step = 0;
      for (std::size_t i = 0; i < labels.size(); ++i) step = step * size + 1;
      for (int k = 0; k < size; ++k) v[k * step] = 1.0 / std::sqrt(size);
      return QuantumState::pure(layout, v);
    }
  }
  throw InputError("unknown canonical state");
}

RVec marginal_spectrum(const QuantumState& s, const std::vector<std::string>& keep) {
  RVec vals;
  if (s.is_vector()) {
    Mat c = coefficient_matrix(s, keep);
    Mat g = c.rows() <= c.cols() ? Mat(c * c.adjoint()) : Mat(c.adjoint() * c);
    vals = eigvalsh(g);
    const long dk = s.layout().dim_of(keep);
    if (vals.size() < dk) {
      RVec padded = RVec::Zero(dk);
      padded.tail(vals.size()) = vals;
      vals = padded;
    }
  } else {
    vals = eigvalsh(reduce(s, keep).mat());
  }
  vals = clamp_spectrum(vals);
  std::sort(vals.data(), vals.data() + vals.size(), std::greater<double>());
  return vals;
}

double marginal_purity(const QuantumState& s, const std::vector<std::string>& keep) {
  if (s.is_vector()) {
    Mat c = coefficient_matrix(s, keep);
    Mat g = c.rows() <= c.cols() ? Mat(c * c.adjoint()) : Mat(c.adjoint() * c);
    return g.squaredNorm();
  }
  return reduce(s, keep).mat().squaredNorm();
}

namespace detail {

SplitFactor split_factor(const FactoredState& f, const std::vector<std::string>& cond) {
  require_labels(f.layout, cond);
  SplitFactor out;
  out.R = cond;
  out.A = f.layout.complement(cond);
  out.dA = f.layout.dim_of(out.A);
  out.dR = f.layout.dim_of(cond);
  std::vector<std::string> order = out.A;
  order.insert(order.end(), cond.begin(), cond.end());
  std::vector<int> perm = perm_for(f.layout, order);
  if (is_identity(perm)) {
    out.F = f.F;
    return out;
  }
  std::vector<long> map = index_map(f.layout.dims(), perm);
  out.F.resize(f.F.rows(), f.F.cols());
  for (long i = 0; i < static_cast<long>(map.size()); ++i) out.F.row(i) = f.F.row(map[i]);
  return out;
}

FactoredState factor_of(const QuantumState& s) {
  if (s.is_vector()) return {s.layout(), Mat(s.vec())};
  return marginal_factor(s, s.layout().labels());
}

}  // namespace detail
}  // namespace mergelab
