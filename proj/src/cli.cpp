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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mergelab/cli.hpp"
#include "mergelab/embezzle.hpp"
#include "mergelab/entropy.hpp"
#include "mergelab/errors.hpp"
#include "mergelab/merge.hpp"
#include "mergelab/plot.hpp"
#include "mergelab/random.hpp"
#include "mergelab/region.hpp"
#include "mergelab/split.hpp"
#include "mergelab/state_io.hpp"
#include "mergelab/sweep.hpp"

namespace mergelab {
namespace {

struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string generator = "random";
  std::string dims, K, L, M, N, partition, point;
  int dR = 1, dA = 0, dB = 0;
  std::vector<int> d;
  double alpha = -1;
  std::string family = "common_tilt";
  double eps = 0, eps2 = 0;
  int samples = 1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string format = "csv";
  std::string out;
};

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<int> int_list(const std::string& s, const char* flag) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError(std::string("--") + flag + ": expected positive integers, got '" + tok + "'");
    }
  }
  return out;
}

std::vector<double> real_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw InputError("expected a real number, got '" + tok + "'");
    }
  }
  return out;
}

std::vector<std::string> label_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

std::pair<std::vector<std::string>, std::vector<std::string>> split_bar(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos) return {label_list(s), {}};
  return {label_list(s.substr(0, bar)), label_list(s.substr(bar + 1))};
}

std::string join(const std::vector<int>& v, char sep = 'x') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

void require_seed(const Options& o) {
  if (!o.seed_set) throw InputError("--seed is required for stochastic subcommands");
  if (o.samples < 1) throw InputError("--samples must be at least 1");
}

QuantumState generate(const Options& o) {
  if (!o.input.empty()) return read_state_file(o.input);
  std::vector<Subsystem> subs;
  auto dims = int_list(o.dims, "dims");
  if (o.generator == "embezzle") {
    EmbezzleParams p;
    p.d = o.d.empty() ? 8 : o.d.front();
    p.family = o.family == "orthonormal" ? Family::orthonormal : Family::common_tilt;
    p.alpha = p.family == Family::orthonormal ? 0 : (o.alpha < 0 ? 1.0 / p.d : o.alpha);
    return build_embezzling(p);
  }
  if (dims.empty()) throw InputError("--dims is required for generated states");
  for (std::size_t i = 0; i < dims.size(); ++i) subs.push_back({"C" + std::to_string(i + 1), dims[i], Role::sender});
  if (o.dA > 0) subs.push_back({"A", o.dA, Role::receiverA});
  if (o.dB > 0) subs.push_back({"B", o.dB, Role::receiverB});
  if (o.dR > 1) subs.push_back({"R", o.dR, Role::reference});
  if (o.generator == "random") {
    if (!o.seed_set) throw InputError("--seed is required for random states");
    return random_pure_state(SystemLayout(subs), o.seed);
  }
  if (o.generator == "ghz") {
    std::vector<std::string> labels;
    for (const auto& s : subs) {
      if (s.dim != subs.front().dim) throw InputError("ghz needs equal local dimensions");
      labels.push_back(s.label);
    }
    QuantumState g = canonical_state(Canonical::ghz, subs.front().dim, labels);
    for (const auto& s : subs) g = relabel(g, {{s.label, s.label}}, s.role);
    return g;
  }
  throw InputError("unknown generator '" + o.generator + "'");
}

class Sink {
 public:
  explicit Sink(const Options& o, std::ostream& fallback) : path_(o.out), fallback_(fallback) {}
  std::ostream& stream() { return buf_; }
  void flush() {
    if (path_.empty()) {
      fallback_ << buf_.str();
      return;
    }
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path_ + "'");
    f << buf_.str();
  }

 private:
  std::string path_;
  std::ostream& fallback_;
  std::ostringstream buf_;
};

void write_timing(const Options& o, const std::string& what, double ms) {
  if (o.out.empty()) return;
  std::ofstream f(o.out + ".timing.csv", std::ios::binary);
  f << "subcommand,samples,threads,wall_ms\n" << what << ',' << o.samples << ',' << sweep_threads() << ','
    << fmt(ms) << '\n';
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---- entropy ----

int cmd_entropy(const Options& o, std::ostream& out) {
  QuantumState psi = generate(o);
  auto [part, cond] = split_bar(o.partition);
  const auto& lay = psi.layout();
  if (part.empty()) {
    part = lay.labels_with_role(Role::sender);
    if (part.empty()) part = {lay.labels().front()};
  }
  if (cond.empty() && o.partition.find('|') == std::string::npos) cond = lay.labels_with_role(Role::reference);
  for (const auto& l : part)
    if (std::find(cond.begin(), cond.end(), l) != cond.end()) throw InputError("'" + l + "' on both sides of --partition");

  std::vector<EntropyReport> reports;
  EntropyReport vn;
  vn.quantity = Quantity::vonNeumann;
  vn.value = entropy_of(psi, part);
  reports.push_back(vn);
  std::vector<std::string> keep = part;
  keep.insert(keep.end(), cond.begin(), cond.end());
  FactoredState f = marginal_factor(psi, keep);
  if (!cond.empty()) {
    EntropyReport c;
    c.quantity = Quantity::condVN;
    c.value = cond_von_neumann(psi, part, cond);
    reports.push_back(c);
    QuantumState sigma = reduce(psi, cond);
    reports.push_back(h_min_relative(f, sigma));
    EntropyReport h2;
    h2.quantity = Quantity::h2Rel;
    h2.value = h2_collision(f.F, static_cast<int>(lay.dim_of(part)), static_cast<int>(lay.dim_of(cond)),
                            sigma.mat());
    reports.push_back(h2);
  }
  reports.push_back(h_min_conditional(f, cond));
  EntropyReport hm;
  hm.quantity = Quantity::hMax;
  hm.value = h_max_spectrum(marginal_spectrum(psi, part));
  reports.push_back(hm);
  if (psi.is_vector() && !cond.empty()) reports.push_back(h_max_conditional(psi, part, cond));
  if (o.eps > 0) {
    RVec sp = marginal_spectrum(psi, part);
    Truncation t = smooth_h_max_truncation(std::vector<double>(sp.data(), sp.data() + sp.size()), o.eps);
    EntropyReport s;
    s.quantity = Quantity::smoothHMax;
    s.value = t.lower_bound_bits;
    s.k = t.k;
    s.epsilon = o.eps;
    reports.push_back(s);
  }

  Sink sink(o, out);
  if (o.format == "json") {
    nlohmann::json j;
    j["part"] = part;
    j["cond"] = cond;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
    sink.stream() << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    sink.stream() << "quantity,value,status,gap\n";
    for (const auto& r : reports)
      sink.stream() << to_string(r.quantity) << ',' << fmt(r.value) << ',' << to_string(r.status) << ','
                    << fmt(r.gap) << '\n';
  } else {
    throw InputError("entropy supports --format csv or json");
  }
  sink.flush();
  return kExitOk;
}

// ---- region ----

Series boundary_m2(const CostRegion& r, const std::string& name) {
  double a = 0, b = 0, s = 0;
  for (const auto& q : r.inequalities) {
    if (q.subset == 1) a = q.rhs;
    if (q.subset == 2) b = q.rhs;
    if (q.subset == 3) s = q.rhs;
  }
  Series out{name, {}, true};
  const double pad = 3;
  double c1y = std::max(s - a, b), c2x = std::max(s - b, a);
  out.points = {{a, c1y + pad}, {a, c1y}, {c2x, b}, {c2x + pad, b}};
  return out;
}

int cmd_region(const Options& o, std::ostream& out) {
  QuantumState psi = generate(o);
  auto a = psi.layout().labels_with_role(Role::receiverA);
  auto b = psi.layout().labels_with_role(Role::receiverB);
  const bool split = !a.empty() && !b.empty();
  Parties parties;
  std::vector<CostRegion> regions;
  std::vector<Prop5Point> points;
  if (split) {
    if (a.size() != 1 || b.size() != 1) throw InputError("split regions need one A and one B system");
    parties.senders = psi.layout().labels_with_role(Role::sender);
    SplitRegion sr = build_split_region(psi, split_bar(o.partition).first, a[0], b[0]);
    regions.push_back(sr.T_side);
    regions.push_back(sr.Tbar_side);
  } else {
    parties = merge_parties(psi.layout());
    regions.push_back(build_merge_region(psi, parties.senders, parties.receiver));
    if (o.eps > 0) {
      OneShotRegions os = one_shot_regions(psi, o.eps);
      regions.push_back(os.thm4);
      points = os.prop5_points;
    }
  }
  nlohmann::json membership;
  if (!o.point.empty()) {
    Membership m = contains(regions.front(), real_list(o.point));
    membership = {{"inside", m.inside}, {"violated", m.violated}, {"slack", m.slack}};
  }

  Sink sink(o, out);
  if (o.format == "json") {
    nlohmann::json j;
    j["regions"] = nlohmann::json::array();
    for (const auto& r : regions) j["regions"].push_back(region_to_json(r));
    if (!points.empty()) {
      j["prop5_points"] = nlohmann::json::array();
      for (const auto& p : points)
        j["prop5_points"].push_back({{"permutation", p.permutation}, {"costs", p.costs}, {"finite", p.finite},
                                     {"dominance_closed", p.dominance_closed}});
    }
    if (!membership.is_null()) j["membership"] = membership;
    sink.stream() << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    sink.stream() << "provenance,subset,rhs\n";
    for (const auto& r : regions)
      for (const auto& q : r.inequalities) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < r.senders.size(); ++i)
          if (q.subset & (1u << i)) idx.push_back(static_cast<int>(i));
        sink.stream() << to_string(r.provenance) << ',' << join(idx, ' ') << ',' << fmt(q.rhs) << '\n';
      }
    if (!points.empty()) sink.stream() << '\n' << prop5_csv(parties.senders, points);
  } else if (o.format == "svg") {
    if (split || parties.senders.size() != 2) throw InputError("svg output needs a merging layout with two senders");
    std::vector<Series> series{boundary_m2(regions[0], "asymptotic")};
    if (o.eps > 0) {
      series.push_back(boundary_m2(regions[1], "one-shot sum bound"));
      Series pts{"sequential points", {}, false};
      for (const auto& p : points) pts.points.push_back({p.costs[0], p.costs[1]});
      series.push_back(pts);
    }
    sink.stream() << render_svg(series, "cost region");
  } else {
    throw InputError("unknown format '" + o.format + "'");
  }
  sink.flush();
  return kExitOk;
}

// ---- simulate ----

int cmd_simulate(const Options& o, std::ostream& out) {
  require_seed(o);
  QuantumState psi = generate(o);
  Parties parties = merge_parties(psi.layout());
  SweepConfig cfg;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.K = int_list(o.K, "K");
  cfg.L = int_list(o.L, "L");
  if (cfg.K.empty() && cfg.L.empty() && o.eps > 0) {
    CostAssignment c = theorem4_cost(psi, o.eps);
    if (!c.feasible) throw InputError("cost assignment is infeasible for these dimensions");
    cfg.K = c.K();
    cfg.L = c.L();
  }
  if (cfg.K.empty()) cfg.K.assign(parties.senders.size(), 1);
  if (cfg.L.empty()) cfg.L.assign(parties.senders.size(), 1);
  if (cfg.K.size() != parties.senders.size() || cfg.L.size() != parties.senders.size())
    throw InputError("--K and --L need one entry per sender");

  auto t0 = std::chrono::steady_clock::now();
  auto reports = sweep_merging(psi, cfg);
  write_timing(o, "simulate", elapsed_ms(t0));

  bool ok = true;
  Sink sink(o, out);
  if (o.format == "csv") {
    sink.stream() << "seed,m,dims,K,L,q_error,delta_bound,gamma,end_error,bound_2sqrt,lemma3_lhs,lemma3_rhs\n";
    for (const auto& r : reports)
      sink.stream() << r.seed << ',' << r.m << ',' << join(r.dims) << ',' << join(r.K) << ',' << join(r.L) << ','
                    << fmt(r.q_error) << ',' << fmt(r.delta_bound) << ',' << fmt(r.gamma) << ','
                    << fmt(r.end_to_end_error) << ',' << fmt(r.bound_2sqrt) << ',' << fmt(r.lemma3_lhs) << ','
                    << fmt(r.lemma3_rhs) << '\n';
  } else if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports)
      j.push_back({{"seed", r.seed}, {"m", r.m}, {"dims", r.dims}, {"K", r.K}, {"L", r.L}, {"q_error", r.q_error},
                   {"delta_bound", r.delta_bound}, {"gamma", r.gamma}, {"end_error", r.end_to_end_error},
                   {"bound_2sqrt", r.bound_2sqrt}, {"lemma3_lhs", r.lemma3_lhs}, {"lemma3_rhs", r.lemma3_rhs}});
    sink.stream() << j.dump(2) << '\n';
  } else if (o.format == "svg") {
    Series s{"end error vs 2 sqrt(Q)", {}, false};
    for (const auto& r : reports) s.points.push_back({r.bound_2sqrt, r.end_to_end_error});
    sink.stream() << render_svg({s}, "merging error", "2 sqrt(Q) (trace norm)", "end-to-end error (trace norm)");
  } else {
    throw InputError("unknown format '" + o.format + "'");
  }
  for (const auto& r : reports) ok = ok && r.bound_holds;
  sink.flush();
  if (!ok) throw AssertionFailure("end-to-end error exceeded 2 sqrt(Q) on at least one run");
  return kExitOk;
}

// ---- split ----

int cmd_split(const Options& o, std::ostream& out) {
  require_seed(o);
  Options so = o;
  if (so.input.empty()) {
    if (so.dA == 0) so.dA = 2;
    if (so.dB == 0) so.dB = 2;
  }
  QuantumState psi = generate(so);
  auto T = split_bar(o.partition).first;
  SplitParties sp = split_parties(psi.layout(), T);
  SplitCosts costs{int_list(o.K, "K"), int_list(o.L, "L"), int_list(o.M, "M"), int_list(o.N, "N")};
  if (costs.K.empty() && costs.L.empty() && costs.M.empty() && costs.N.empty() && o.eps > 0) {
    auto [c1, c2] = prop8_split_costs(psi, sp.T, o.eps, o.eps2 > 0 ? o.eps2 : o.eps);
    if (!c1.feasible || !c2.feasible) throw InputError("split cost assignment is infeasible");
    costs = {c1.K(), c1.L(), c2.K(), c2.L()};
  }
  if (costs.K.empty()) costs.K.assign(sp.T.size(), 1);
  if (costs.L.empty()) costs.L.assign(sp.T.size(), 1);
  if (costs.M.empty()) costs.M.assign(sp.Tbar.size(), 1);
  if (costs.N.empty()) costs.N.assign(sp.Tbar.size(), 1);

  auto t0 = std::chrono::steady_clock::now();
  std::vector<SplitReport> reports(o.samples);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(sweep_threads())
  for (int i = 0; i < o.samples; ++i) {
    try {
      reports[i] = split_transfer_sim(psi, sp.T, costs, sweep_seed(o.seed, i));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  write_timing(o, "split", elapsed_ms(t0));

  Sink sink(o, out);
  if (o.format == "csv") {
    sink.stream() << "seed,q1,delta1,q2,delta2,end_error,bound\n";
    for (const auto& r : reports)
      sink.stream() << r.seed << ',' << fmt(r.q1) << ',' << fmt(r.delta1) << ',' << fmt(r.q2) << ','
                    << fmt(r.delta2) << ',' << fmt(r.end_error) << ',' << fmt(r.bound) << '\n';
  } else if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports)
      j.push_back({{"seed", r.seed}, {"q1", r.q1}, {"delta1", r.delta1}, {"q2", r.q2}, {"delta2", r.delta2},
                   {"end_error", r.end_error}, {"bound", r.bound}});
    sink.stream() << j.dump(2) << '\n';
  } else {
    throw InputError("split supports --format csv or json");
  }
  sink.flush();
  for (const auto& r : reports)
    if (!r.bound_holds) throw AssertionFailure("split-transfer error exceeded its bound on at least one run");
  return kExitOk;
}

// ---- embezzle ----

int cmd_embezzle(const Options& o, std::ostream& out) {
  std::vector<int> ds = o.d.empty() ? std::vector<int>{1024} : o.d;
  std::vector<EmbezzleRow> rows;
  for (int d : ds) {
    EmbezzleParams p;
    p.d = d;
    p.family = o.family == "orthonormal" ? Family::orthonormal : Family::common_tilt;
    if (o.family != "orthonormal" && o.family != "common_tilt") throw InputError("unknown family '" + o.family + "'");
    p.alpha = p.family == Family::orthonormal ? 0 : (o.alpha < 0 ? 1.0 / d : o.alpha);
    p.epsilon = o.eps > 0 ? o.eps : 0.1;
    rows.push_back(embezzle_row(p));
  }
  Sink sink(o, out);
  if (o.format == "csv") {
    sink.stream() << "d,alpha,eps,hmin_exact,gersh_bound,singlet,hmax,smooth_bound,thm4_sum,prop5_lower\n";
    for (const auto& r : rows)
      sink.stream() << r.d << ',' << fmt(r.alpha) << ',' << fmt(r.eps) << ',' << fmt(r.hmin_exact) << ','
                    << fmt(r.gersh_bound) << ',' << fmt(r.singlet) << ',' << fmt(r.hmax) << ','
                    << fmt(r.smooth_bound) << ',' << fmt(r.thm4_sum) << ',' << fmt(r.prop5_lower) << '\n';
  } else if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
      j.push_back({{"d", r.d}, {"alpha", r.alpha}, {"eps", r.eps}, {"hmin_exact", r.hmin_exact},
                   {"gersh_bound", r.gersh_bound}, {"singlet", r.singlet}, {"hmax", r.hmax},
                   {"smooth_bound", r.smooth_bound}, {"thm4_sum", r.thm4_sum}, {"prop5_lower", r.prop5_lower}});
    sink.stream() << j.dump(2) << '\n';
  } else if (o.format == "svg") {
    EmbezzleParams p;
    p.d = ds.front();
    p.alpha = o.alpha < 0 ? 1.0 / p.d : o.alpha;
    p.epsilon = o.eps > 0 ? o.eps : 0.1;
    if (p.d > 64) throw InputError("svg region plot builds the state; use --d 64 or less");
    OneShotRegions r = one_shot_regions(build_embezzling(p), p.epsilon);
    Series pts{"sequential points", {}, false};
    for (const auto& q : r.prop5_points) pts.points.push_back({q.costs[0], q.costs[1]});
    sink.stream() << render_svg({boundary_m2(r.thm4, "one-shot region"), pts}, "embezzling costs",
                                "E1 (ebits)", "E2 (ebits)");
  } else {
    throw InputError("unknown format '" + o.format + "'");
  }
  sink.flush();
  return kExitOk;
}

// ---- selftest ----

int cmd_selftest(bool quick, std::ostream& out) {
  auto results = run_selftest(quick);
  bool ok = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << "  " << r.detail;
    out << '\n';
    ok = ok && r.pass;
  }
  return ok ? kExitOk : kExitAssertion;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "state JSON file");
  sub->add_option("--generator", o.generator, "random|ghz|embezzle");
  sub->add_option("--dims", o.dims, "comma-separated sender dimensions");
  sub->add_option("--dR", o.dR, "reference dimension");
  sub->add_option("--dA", o.dA, "receiver A dimension (0 = absent)");
  sub->add_option("--dB", o.dB, "receiver B dimension (0 = absent)");
  sub->add_option("--d", o.d, "embezzling dimension(s)")->delimiter(',');
  sub->add_option("--alpha", o.alpha, "embezzling overlap (default 1/d)");
  sub->add_option("--family", o.family, "orthonormal|common_tilt");
  sub->add_option("--K", o.K);
  sub->add_option("--L", o.L);
  sub->add_option("--M", o.M);
  sub->add_option("--N", o.N);
  sub->add_option("--partition", o.partition, "labels, optionally 'part|cond'");
  sub->add_option("--point", o.point, "rate vector for membership");
  sub->add_option("--eps", o.eps);
  sub->add_option("--eps2", o.eps2);
  sub->add_option("--samples", o.samples);
  sub->add_option_function<std::uint64_t>("--seed", [&o](const std::uint64_t& s) {
    o.seed = s;
    o.seed_set = true;
  });
  sub->add_option("--format", o.format, "csv|json|svg");
  sub->add_option("--out", o.out, "output path (default stdout)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mergelab: one-shot and asymptotic multiparty state merging toolkit"};
  app.require_subcommand(1);
  Options o;
  bool quick = false;
  const char* names[] = {"entropy", "region", "simulate", "split", "embezzle"};
  const char* help[] = {"entropies of a state", "rate and cost regions", "merging Monte Carlo",
                        "split-transfer Monte Carlo", "embezzling-state tables"};
  std::vector<CLI::App*> subs;
  for (int i = 0; i < 5; ++i) {
    subs.push_back(app.add_subcommand(names[i], help[i]));
    add_common(subs.back(), o);
  }
  CLI::App* self = app.add_subcommand("selftest", "built-in property checks");
  self->add_flag("--quick", quick);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  try {
    if (subs[0]->parsed()) return cmd_entropy(o, out);
    if (subs[1]->parsed()) return cmd_region(o, out);
    if (subs[2]->parsed()) return cmd_simulate(o, out);
    if (subs[3]->parsed()) return cmd_split(o, out);
    if (subs[4]->parsed()) return cmd_embezzle(o, out);
    return cmd_selftest(quick, out);
  } catch (const AssertionFailure& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kExitAssertion;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace mergelab
