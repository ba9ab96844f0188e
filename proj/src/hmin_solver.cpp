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


#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "detail.hpp"
#include "mergelab/entropy.hpp"
#include "mergelab/errors.hpp"

namespace mergelab {
namespace {

// A_k as a sparse Hermitian N x N matrix, with objective weight c_k = Tr E_k.
struct BasisOp {
  std::vector<int> row;
  std::vector<int> col;
  std::vector<cplx> val;
  double c = 0;
};

struct Solved {
  double p = 0;  // certified upper bound on 2^{-H}
  double q = 0;  // certified lower bound
  RVec x;
  double lambda_star = 1;
  int iterations = 0;
};

Mat assemble(const std::vector<BasisOp>& basis, const RVec& x, long N) {
  Mat S = Mat::Zero(N, N);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t e = 0; e < basis[k].val.size(); ++e)
      S(basis[k].row[e], basis[k].col[e]) += x[k] * basis[k].val[e];
  return S;
}

// min c.x  s.t.  sum_k x_k A_k >= C, by a primal log-barrier path.
Solved barrier_solve(const Mat& C, const std::vector<BasisOp>& basis, RVec x,
                     const std::function<Mat(const Mat&)>& repair, const SolverOptions& opt) {
  const long N = C.rows();
  const long n = static_cast<long>(basis.size());
  RVec c(n);
  for (long k = 0; k < n; ++k) c[k] = basis[k].c;

  Solved best;
  best.p = std::numeric_limits<double>::infinity();
  best.q = 0;
  best.x = x;
  double t = static_cast<double>(N) / std::max(1e-300, c.dot(x));
  int iters = 0;

  for (int outer = 0; outer < 40; ++outer) {
    Mat W;
    for (int it = 0; it < opt.max_newton; ++it) {
      Mat S = assemble(basis, x, N) - C;
      Eigen::LLT<Mat> llt(S);
      if (llt.info() != Eigen::Success) break;
      W = llt.solve(Mat::Identity(N, N));
      RVec g(n);
      for (long k = 0; k < n; ++k) {
        cplx acc = 0;
        const BasisOp& b = basis[k];
        for (std::size_t e = 0; e < b.val.size(); ++e) acc += b.val[e] * W(b.col[e], b.row[e]);
        g[k] = t * c[k] - acc.real();
      }
      Eigen::MatrixXd H(n, n);
      for (long k = 0; k < n; ++k) {
        const BasisOp& bk = basis[k];
        for (long l = k; l < n; ++l) {
          const BasisOp& bl = basis[l];
          cplx acc = 0;
          for (std::size_t e = 0; e < bk.val.size(); ++e)
            for (std::size_t f = 0; f < bl.val.size(); ++f)
              acc += bk.val[e] * bl.val[f] * W(bk.col[e], bl.row[f]) * W(bl.col[f], bk.row[e]);
          H(k, l) = H(l, k) = acc.real();
        }
      }
      Eigen::LDLT<Eigen::MatrixXd> ldlt(H);
      RVec dx = ldlt.solve(-g);
      double dec = -g.dot(dx);
      ++iters;
      if (!std::isfinite(dec) || dec < 0) break;
      if (dec < 1e-12) break;
      double s = dec > 0.0625 ? 1.0 / (1.0 + std::sqrt(dec)) : 1.0;
      RVec trial = x + s * dx;
      while (s > 1e-14) {
        Eigen::LLT<Mat> chk(assemble(basis, trial, N) - C);
        if (chk.info() == Eigen::Success) break;
        s *= 0.5;
        trial = x + s * dx;
      }
      if (s <= 1e-14) break;
      x = trial;
      if (dec < 1e-10) break;
    }
    if (W.size() == 0) break;

    Mat S = assemble(basis, x, N);
    Eigen::LLT<Mat> llt_s(S);
    if (llt_s.info() != Eigen::Success) break;
    Mat L = llt_s.matrixL();
    Mat Linv = L.triangularView<Eigen::Lower>().solve(Mat::Identity(N, N));
    double lambda_star = std::max(max_eig(Linv * C * Linv.adjoint()), 0.0);
    double p = lambda_star * c.dot(x);
    Mat Y = repair(hermitize(W / t));
    double q = (C.cwiseProduct(Y.conjugate())).sum().real();
    if (p < best.p) {
      best.p = p;
      best.x = x;
      best.lambda_star = lambda_star;
    }
    best.q = std::max(best.q, q);
    double gap = std::log2(best.p / std::max(best.q, 1e-300));
    if (gap <= opt.target_gap_bits || t >= 1e16) break;
    t *= 10;
  }
  best.iterations = iters;
  return best;
}

struct Component {
  std::vector<int> r;  // reduced R indices
  double p = 0;
  double q = 0;
  Mat X;  // on the component's R indices
  bool closed = true;
  int iterations = 0;
};

// rho_c = Fc Fc^+ with rows a * nr + local r.
void solve_component(const Mat& Fc, long dA, long nr, Component& out, const SolverOptions& opt) {
  const long N = dA * nr;
  if (nr == 1) {
    double lam = detail::top_gram(Fc);
    out.p = out.q = lam;
    out.X = Mat::Constant(1, 1, lam);
    return;
  }
  Eigen::BDCSVD<Mat> svd(Fc, Eigen::ComputeThinU);
  const RVec& sv = svd.singularValues();
  long rank = 0;
  while (rank < sv.size() && sv[rank] > 1e-12 * sv[0]) ++rank;
  if (rank == 1) {
    Vec v = sv[0] * svd.matrixU().col(0);
    Mat M(dA, nr);
    for (long a = 0; a < dA; ++a)
      for (long r = 0; r < nr; ++r) M(a, r) = v[a * nr + r];
    Eigen::BDCSVD<Mat> ms(M, Eigen::ComputeThinV);
    double S = ms.singularValues().sum();
    out.p = out.q = S * S;
    Mat Vb = ms.matrixV().conjugate();
    out.X = S * Vb * ms.singularValues().asDiagonal() * Vb.adjoint();
    return;
  }
  Mat C = Fc * Fc.adjoint();
  const double mu = 1.01 * max_eig(C) + 1e-14;

  // Disjoint A-supports per R index make a diagonal X optimal.
  std::vector<std::vector<int>> supp(nr);
  const double tol = 1e-10 * Fc.norm();
  std::vector<int> owner(dA, -1);
  bool disjoint = true;
  for (long r = 0; r < nr && disjoint; ++r)
    for (long a = 0; a < dA; ++a)
      if (Fc.row(a * nr + r).norm() > tol) {
        if (owner[a] >= 0) {
          disjoint = false;
          break;
        }
        owner[a] = static_cast<int>(r);
        supp[r].push_back(static_cast<int>(a));
      }

  out.closed = false;
  if (disjoint) {
    std::vector<int> idx;
    std::vector<int> group;
    for (long r = 0; r < nr; ++r)
      for (int a : supp[r]) {
        idx.push_back(static_cast<int>(a * nr + r));
        group.push_back(static_cast<int>(r));
      }
    const long n = static_cast<long>(idx.size());
    Mat Cs(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) Cs(i, j) = C(idx[i], idx[j]);
    std::vector<BasisOp> basis(nr);
    for (long i = 0; i < n; ++i) {
      basis[group[i]].row.push_back(static_cast<int>(i));
      basis[group[i]].col.push_back(static_cast<int>(i));
      basis[group[i]].val.push_back(1.0);
    }
    for (auto& b : basis) b.c = 1;
    auto repair = [&](const Mat& Y) {
      RVec z = RVec::Zero(nr);
      for (long i = 0; i < n; ++i) z[group[i]] += Y(i, i).real();
      RVec s(n);
      for (long i = 0; i < n; ++i) s[i] = 1.0 / std::sqrt(z[group[i]]);
      return Mat(s.asDiagonal() * Y * s.asDiagonal());
    };
    Solved sol = barrier_solve(Cs, basis, RVec::Constant(nr, mu), repair, opt);
    out.p = sol.p;
    out.q = sol.q;
    out.X = Mat::Zero(nr, nr);
    for (long r = 0; r < nr; ++r) out.X(r, r) = sol.lambda_star * sol.x[r];
    out.iterations = sol.iterations;
    return;
  }

  if (N > opt.max_block_dim)
    throw ScaleError("h_min_conditional: block of dimension " + std::to_string(N) + " exceeds cap");
  const double work = std::pow(static_cast<double>(nr), 4) * 4.0 * dA * dA;
  if (work > 4e8) throw ScaleError("h_min_conditional: conditioning system too large for the solver");

  std::vector<BasisOp> basis;
  RVec x0;
  std::vector<std::pair<int, int>> where;
  const double h = 1.0 / std::sqrt(2.0);
  for (long r = 0; r < nr; ++r)
    for (long s = r; s < nr; ++s) {
      int kinds = r == s ? 1 : 2;
      for (int kind = 0; kind < kinds; ++kind) {
        BasisOp b;
        for (long a = 0; a < dA; ++a) {
          int i = static_cast<int>(a * nr + r), j = static_cast<int>(a * nr + s);
          if (r == s) {
            b.row.push_back(i); b.col.push_back(i); b.val.push_back(1.0);
          } else if (kind == 0) {
            b.row.push_back(i); b.col.push_back(j); b.val.push_back(h);
            b.row.push_back(j); b.col.push_back(i); b.val.push_back(h);
          } else {
            b.row.push_back(i); b.col.push_back(j); b.val.push_back(cplx(0, h));
            b.row.push_back(j); b.col.push_back(i); b.val.push_back(cplx(0, -h));
          }
        }
        b.c = r == s ? 1.0 : 0.0;
        basis.push_back(b);
        where.push_back({static_cast<int>(r), static_cast<int>(s)});
      }
    }
  x0 = RVec::Zero(static_cast<long>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k].c == 1.0) x0[k] = mu;
  auto repair = [&](const Mat& Y) {
    Mat Z = Mat::Zero(nr, nr);
    for (long a = 0; a < dA; ++a) Z += Y.block(a * nr, a * nr, nr, nr);
    Mat zi = psd_power(hermitize(Z), -0.5, 0.0);
    Mat out_y(N, N);
    for (long a = 0; a < dA; ++a)
      for (long b = 0; b < dA; ++b) out_y.block(a * nr, b * nr, nr, nr) = zi * Y.block(a * nr, b * nr, nr, nr) * zi;
    return out_y;
  };
  Solved sol = barrier_solve(C, basis, x0, repair, opt);
  out.p = sol.p;
  out.q = sol.q;
  Mat X = Mat::Zero(nr, nr);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto [r, s] = where[k];
    const BasisOp& b = basis[k];
    X(r, s) += sol.x[k] * b.val[0];
    if (r != s) X(s, r) += sol.x[k] * b.val[1];
  }
  out.X = sol.lambda_star * X;
  out.iterations = sol.iterations;
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

EntropyReport h_min_conditional(const Mat& F_in, int dA_in, int dR_in, const SolverOptions& opt) {
  const long dA = dA_in, dR = dR_in;
  if (F_in.rows() != dA * dR) throw DimensionError("h_min_conditional: factor rows");
  EntropyReport rep;
  rep.quantity = Quantity::hMinCond;
  if (F_in.cols() == 0 || F_in.norm() == 0) throw NormalizationError("h_min_conditional: zero state");

  // Column-rank reduction of the factor.
  Mat F;
  {
    Eigen::BDCSVD<Mat> svd(F_in, Eigen::ComputeThinU);
    const RVec& sv = svd.singularValues();
    long rank = 0;
    while (rank < sv.size() && sv[rank] > 1e-12 * sv[0]) ++rank;
    F = svd.matrixU().leftCols(rank) * sv.head(rank).asDiagonal();
  }
  const bool keep_sigma = dR <= 512;

  if (F.cols() == 1) {
    Mat M(dA, dR);
    for (long a = 0; a < dA; ++a)
      for (long r = 0; r < dR; ++r) M(a, r) = F(a * dR + r, 0);
    Eigen::BDCSVD<Mat> ms(M, Eigen::ComputeThinV);
    double S = ms.singularValues().sum();
    rep.value = -2 * log2_safe(S);
    rep.lambda = S * S;
    rep.status = SolverStatus::closed_form;
    if (keep_sigma) {
      Mat Vb = ms.matrixV().conjugate();
      rep.sigma = Mat(Vb * ms.singularValues().asDiagonal() * Vb.adjoint() / S);
    }
    return rep;
  }

  // Restrict R to the support of rho_R, in its eigenbasis.
  Mat VR;
  {
    Mat G(dR, dA * F.cols());
    for (long a = 0; a < dA; ++a) G.middleCols(a * F.cols(), F.cols()) = F.middleRows(a * dR, dR);
    Eigen::BDCSVD<Mat> svd(G, Eigen::ComputeThinU);
    const RVec& sv = svd.singularValues();
    long rank = 0;
    while (rank < sv.size() && sv[rank] > 1e-10 * sv[0]) ++rank;
    VR = svd.matrixU().leftCols(rank);
  }
  const long nR = VR.cols();
  // Restrict A to the support of rho_A, in its eigenbasis.
  Mat VA;
  {
    Mat G(dA, dR * F.cols());
    for (long a = 0; a < dA; ++a)
      for (long r = 0; r < dR; ++r) G.block(a, r * F.cols(), 1, F.cols()) = F.row(a * dR + r);
    Eigen::BDCSVD<Mat> svd(G, Eigen::ComputeThinU);
    const RVec& sv = svd.singularValues();
    long rank = 0;
    while (rank < sv.size() && sv[rank] > 1e-10 * sv[0]) ++rank;
    VA = svd.matrixU().leftCols(rank);
  }
  const long nA = VA.cols();
  const long k = F.cols();
  Mat Fr(nA * nR, k);
  {
    Mat tmp(dA * nR, k);
    for (long a = 0; a < dA; ++a) tmp.middleRows(a * nR, nR) = VR.adjoint() * F.middleRows(a * dR, dR);
    Fr.setZero();
    for (long a2 = 0; a2 < nA; ++a2)
      for (long a = 0; a < dA; ++a) {
        cplx w = std::conj(VA(a, a2));
        if (w != cplx(0)) Fr.middleRows(a2 * nR, nR) += w * tmp.middleRows(a * nR, nR);
      }
  }

  // Connected components of R indices under nonzero cross blocks.
  std::vector<Mat> Gr(nR);
  for (long r = 0; r < nR; ++r) {
    Mat Mr(nA, k);
    for (long a = 0; a < nA; ++a) Mr.row(a) = Fr.row(a * nR + r);
    Gr[r] = Mr.adjoint() * Mr;
  }
  std::vector<int> parent(nR);
  std::iota(parent.begin(), parent.end(), 0);
  const double tr = Fr.squaredNorm();
  for (long r = 0; r < nR; ++r)
    for (long s = r + 1; s < nR; ++s) {
      double cross = std::abs((Gr[r].cwiseProduct(Gr[s].transpose())).sum());
      if (cross > 1e-24 * tr * tr) {
        int a = find_root(parent, static_cast<int>(r)), b = find_root(parent, static_cast<int>(s));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  std::vector<Component> comps;
  {
    std::vector<int> slot(nR, -1);
    for (long r = 0; r < nR; ++r) {
      int root = find_root(parent, static_cast<int>(r));
      if (slot[root] < 0) {
        slot[root] = static_cast<int>(comps.size());
        comps.emplace_back();
      }
      comps[slot[root]].r.push_back(static_cast<int>(r));
    }
  }

  double p = 0, q = 0;
  bool all_closed = true;
  int iterations = 0;
  for (auto& comp : comps) {
    const long nr = static_cast<long>(comp.r.size());
    Mat Fc(nA * nr, k);
    for (long a = 0; a < nA; ++a)
      for (long j = 0; j < nr; ++j) Fc.row(a * nr + j) = Fr.row(a * nR + comp.r[j]);
    solve_component(Fc, nA, nr, comp, opt);
    p += comp.p;
    q += comp.q;
    all_closed = all_closed && comp.closed;
    iterations += comp.iterations;
  }

  rep.value = -log2_safe(p);
  rep.lambda = p;
  rep.gap = std::max(0.0, std::log2(p / q));
  rep.iterations = iterations;
  if (all_closed) rep.status = SolverStatus::closed_form;
  else rep.status = rep.gap <= 1e-7 ? SolverStatus::converged : SolverStatus::certificate_gap;
  if (keep_sigma) {
    Mat Xr = Mat::Zero(nR, nR);
    for (const auto& comp : comps)
      for (std::size_t i = 0; i < comp.r.size(); ++i)
        for (std::size_t j = 0; j < comp.r.size(); ++j) Xr(comp.r[i], comp.r[j]) = comp.X(i, j);
    rep.sigma = Mat(hermitize(VR * Xr * VR.adjoint()) / p);
  }
  return rep;
}

EntropyReport h_min_conditional(const FactoredState& rho, const std::vector<std::string>& cond,
                                const SolverOptions& opt) {
  detail::SplitFactor sf = detail::split_factor(rho, cond);
  if (cond.empty()) {
    EntropyReport r;
    r.quantity = Quantity::hMinCond;
    double lam = detail::top_gram(sf.F);
    r.value = -log2_safe(lam);
    r.lambda = lam;
    r.status = SolverStatus::closed_form;
    return r;
  }
  return h_min_conditional(sf.F, static_cast<int>(sf.dA), static_cast<int>(sf.dR), opt);
}

EntropyReport h_min_conditional(const QuantumState& rho, const std::vector<std::string>& cond,
                                const SolverOptions& opt) {
  return h_min_conditional(detail::factor_of(rho), cond, opt);
}

}  // namespace mergelab
