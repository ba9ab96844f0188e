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


#include "mergelab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail.hpp"
#include "mergelab/errors.hpp"

namespace mergelab {

using nlohmann::json;

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::vonNeumann: return "vonNeumann";
    case Quantity::condVN: return "condVN";
    case Quantity::hMinRel: return "hMinRel";
    case Quantity::hMinCond: return "hMinCond";
    case Quantity::h2Rel: return "h2Rel";
    case Quantity::hMax: return "hMax";
    case Quantity::hMaxCond: return "hMaxCond";
    case Quantity::smoothHMax: return "smoothHMax";
  }
  return "";
}

std::string to_string(SolverStatus s) {
  switch (s) {
    case SolverStatus::closed_form: return "closed_form";
    case SolverStatus::converged: return "converged";
    case SolverStatus::certificate_gap: return "certificate_gap";
  }
  return "";
}

namespace {

json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

json matrix_json(const Mat& m) {
  json re = json::array(), im = json::array();
  for (long r = 0; r < m.rows(); ++r) {
    std::vector<double> a, b;
    for (long c = 0; c < m.cols(); ++c) {
      a.push_back(m(r, c).real());
      b.push_back(m(r, c).imag());
    }
    re.push_back(a);
    im.push_back(b);
  }
  return {{"re", re}, {"im", im}};
}

}  // namespace

json report_to_json(const EntropyReport& r) {
  json j;
  j["quantity"] = to_string(r.quantity);
  j["value"] = finite_or_null(r.value);
  json w = json::object();
  if (r.sigma) w["sigma"] = matrix_json(*r.sigma);
  if (r.lambda) w["lambda"] = finite_or_null(*r.lambda);
  if (r.k) w["k"] = *r.k;
  if (r.epsilon) w["epsilon"] = *r.epsilon;
  j["witness"] = w;
  j["status"] = to_string(r.status);
  j["gap"] = r.gap;
  if (r.iterations) j["iterations"] = r.iterations;
  return j;
}

double von_neumann_spectrum(const RVec& spectrum) {
  double s = 0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    double p = spectrum[i];
    if (p > 0) s -= p * std::log2(p);
  }
  return s;
}

double von_neumann(const QuantumState& rho) {
  if (rho.is_vector()) return 0;
  return von_neumann_spectrum(clamp_spectrum(eigvalsh(rho.mat())));
}

double entropy_of(const QuantumState& s, const std::vector<std::string>& keep) {
  if (keep.empty()) return 0;
  if (keep.size() == s.layout().size() && s.is_vector()) return 0;
  return von_neumann_spectrum(marginal_spectrum(s, keep));
}

double cond_von_neumann(const QuantumState& s, const std::vector<std::string>& part,
                        const std::vector<std::string>& cond) {
  if (part.empty()) throw LayoutError("cond_von_neumann: empty part");
  for (const auto& l : part)
    if (std::find(cond.begin(), cond.end(), l) != cond.end())
      throw LayoutError("cond_von_neumann: part and cond overlap");
  std::vector<std::string> joint = part;
  joint.insert(joint.end(), cond.begin(), cond.end());
  return entropy_of(s, joint) - entropy_of(s, cond);
}

namespace {

// Rows of F projected onto the kernel of sigma must vanish.
void check_support(const Mat& F, long dA, long dR, const EigH& es) {
  double scale = std::max(1.0, F.norm());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (es.values[i] > 1e-12) continue;
    Vec v = es.vectors.col(i);
    double leak = 0;
    for (long a = 0; a < dA; ++a) leak += (v.adjoint() * F.middleRows(a * dR, dR)).squaredNorm();
    if (std::sqrt(leak) > 1e-9 * scale) throw SupportError("support of rho_R not contained in sigma");
  }
}

Mat apply_on_R(const Mat& F, long dA, long dR, const Mat& op) {
  Mat out(dA * op.rows(), F.cols());
  for (long a = 0; a < dA; ++a) out.middleRows(a * op.rows(), op.rows()) = op * F.middleRows(a * dR, dR);
  return out;
}

}  // namespace

double detail::top_gram(const Mat& G) {
  Mat g = G.rows() <= G.cols() ? Mat(G * G.adjoint()) : Mat(G.adjoint() * G);
  return max_eig(g);
}

EntropyReport h_min_relative(const Mat& F, int dA, int dR, const Mat& sigma) {
  if (F.rows() != static_cast<long>(dA) * dR) throw DimensionError("h_min_relative: factor rows");
  if (sigma.rows() != dR || sigma.cols() != dR) throw DimensionError("h_min_relative: sigma size");
  EigH es = eigh(sigma);
  check_support(F, dA, dR, es);
  Mat inv_sqrt = psd_power(sigma, -0.5, 1e-12);
  double lambda = detail::top_gram(apply_on_R(F, dA, dR, inv_sqrt));
  EntropyReport r;
  r.quantity = Quantity::hMinRel;
  r.value = -log2_safe(lambda);
  r.lambda = lambda;
  r.sigma = sigma;
  r.status = SolverStatus::closed_form;
  return r;
}

EntropyReport h_min_relative(const FactoredState& rho_AR, const QuantumState& sigma_R) {
  detail::SplitFactor sf = detail::split_factor(rho_AR, sigma_R.layout().labels());
  for (const auto& l : sf.R)
    if (rho_AR.layout.dim(l) != sigma_R.layout().dim(l)) throw DimensionError("sigma dims differ");
  return h_min_relative(sf.F, static_cast<int>(sf.dA), static_cast<int>(sf.dR), sigma_R.density());
}

EntropyReport h_min_relative(const QuantumState& rho_AR, const QuantumState& sigma_R) {
  return h_min_relative(detail::factor_of(rho_AR), sigma_R);
}

double h2_collision(const Mat& F, int dA, int dR, const Mat& sigma) {
  EigH es = eigh(sigma);
  check_support(F, dA, dR, es);
  Mat m = apply_on_R(F, dA, dR, psd_power(sigma, -0.25, 1e-12));
  Mat g = m.adjoint() * m;
  return -log2_safe(g.squaredNorm());
}

double h2_collision(const QuantumState& rho_AB, const QuantumState& sigma_B) {
  detail::SplitFactor sf = detail::split_factor(detail::factor_of(rho_AB), sigma_B.layout().labels());
  return h2_collision(sf.F, static_cast<int>(sf.dA), static_cast<int>(sf.dR), sigma_B.density());
}

double h_max_spectrum(const RVec& spectrum) {
  double s = 0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i)
    if (spectrum[i] > 0) s += std::sqrt(spectrum[i]);
  return 2 * log2_safe(s);
}

double h_max(const QuantumState& rho) {
  if (rho.is_vector()) return log2_safe(rho.trace());
  return h_max_spectrum(clamp_spectrum(eigvalsh(rho.mat())));
}

EntropyReport h_max_conditional(const QuantumState& psi, const std::vector<std::string>& part,
                                const std::vector<std::string>& cond, const SolverOptions& opt) {
  if (!psi.is_vector()) throw KindError("h_max_conditional needs a pure state");
  std::vector<std::string> both = part;
  both.insert(both.end(), cond.begin(), cond.end());
  std::vector<std::string> other = psi.layout().complement(both);
  EntropyReport r;
  if (other.empty()) {
    // H_min(A|nothing) of a pure marginal is H_min(rho_A).
    RVec spec = marginal_spectrum(psi, part);
    r.value = log2_safe(spec.size() ? spec[0] : 0.0);
    r.status = SolverStatus::closed_form;
  } else {
    std::vector<std::string> keep = part;
    keep.insert(keep.end(), other.begin(), other.end());
    FactoredState f = marginal_factor(psi, keep);
    r = h_min_conditional(f, other, opt);
    r.value = -r.value;
  }
  r.quantity = Quantity::hMaxCond;
  return r;
}

MinCut min_cut_entanglement(const QuantumState& psi, const std::string& A, const std::string& B,
                            const std::vector<std::string>& helpers) {
  if (!psi.is_vector()) throw KindError("min_cut_entanglement needs a pure state");
  if (helpers.size() > 12) throw ScaleError("min_cut_entanglement: more than 12 helpers");
  psi.layout().index_of(A);
  psi.layout().index_of(B);
  const unsigned m = static_cast<unsigned>(helpers.size());
  MinCut best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<std::string> best_sorted;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::string> T;
    for (unsigned i = 0; i < m; ++i)
      if (mask & (1u << i)) T.push_back(helpers[i]);
    std::vector<std::string> keep = {A};
    keep.insert(keep.end(), T.begin(), T.end());
    double v = entropy_of(psi, keep);
    std::vector<std::string> sorted = T;
    std::sort(sorted.begin(), sorted.end());
    bool better = v < best.value - 1e-9;
    if (!better && std::abs(v - best.value) <= 1e-9) {
      if (T.size() != best.cut.size()) better = T.size() < best.cut.size();
      else better = sorted < best_sorted;
    }
    if (better) {
      best.value = v;
      best.cut = T;
      best_sorted = sorted;
    }
  }
  return best;
}

}  // namespace mergelab
