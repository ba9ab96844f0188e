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


#include "mergelab/state_io.hpp"

#include <fstream>
#include <sstream>

#include "mergelab/errors.hpp"

namespace mergelab {

using nlohmann::json;

json state_to_json(const QuantumState& s) {
  json j;
  j["layout"] = json::array();
  for (const auto& sub : s.layout().subsystems())
    j["layout"].push_back({{"label", sub.label}, {"dim", sub.dim}, {"role", to_string(sub.role)}});
  if (s.is_vector()) {
    j["kind"] = "vector";
    std::vector<double> re, im;
    for (Eigen::Index i = 0; i < s.vec().size(); ++i) {
      re.push_back(s.vec()[i].real());
      im.push_back(s.vec()[i].imag());
    }
    j["re"] = re;
    j["im"] = im;
  } else {
    j["kind"] = "density";
    const Mat& m = s.mat();
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
    j["re"] = re;
    j["im"] = im;
  }
  return j;
}

QuantumState state_from_json(const json& j) {
  try {
    std::vector<Subsystem> subs;
    for (const auto& e : j.at("layout")) {
      Subsystem s;
      s.label = e.at("label").get<std::string>();
      s.dim = e.at("dim").get<int>();
      s.role = role_from_string(e.value("role", std::string("ancilla")));
      subs.push_back(s);
    }
    SystemLayout layout(subs);
    const std::string kind = j.at("kind").get<std::string>();
    const long D = layout.total_dim();
    if (kind == "vector") {
      auto re = j.at("re").get<std::vector<double>>();
      auto im = j.contains("im") ? j.at("im").get<std::vector<double>>() : std::vector<double>(re.size(), 0.0);
      if (static_cast<long>(re.size()) != D || static_cast<long>(im.size()) != D)
        throw InputError("state vector length does not match layout");
      Vec v(D);
      for (long i = 0; i < D; ++i) v[i] = cplx(re[i], im[i]);
      return QuantumState::pure(layout, v);
    }
    if (kind != "density") throw InputError("kind must be 'vector' or 'density'");
    auto re = j.at("re").get<std::vector<std::vector<double>>>();
    std::vector<std::vector<double>> im;
    if (j.contains("im")) im = j.at("im").get<std::vector<std::vector<double>>>();
    if (static_cast<long>(re.size()) != D) throw InputError("density rows do not match layout");
    Mat m(D, D);
    for (long r = 0; r < D; ++r) {
      if (static_cast<long>(re[r].size()) != D) throw InputError("density row has wrong length");
      for (long c = 0; c < D; ++c) {
        double b = 0;
        if (!im.empty()) {
          if (static_cast<long>(im.size()) != D || static_cast<long>(im[r].size()) != D)
            throw InputError("imaginary part has wrong shape");
          b = im[r][c];
        }
        m(r, c) = cplx(re[r][c], b);
      }
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-8) throw InputError("density matrix is not Hermitian");
    return QuantumState::mixed(layout, hermitize(m));
  } catch (const json::exception& e) {
    throw InputError(std::string("state schema: ") + e.what());
  } catch (const LayoutError& e) {
    throw InputError(std::string("state layout: ") + e.what());
  }
}

QuantumState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return state_from_json(j);
}

void write_state_file(const QuantumState& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << state_to_json(s).dump(2) << "\n";
}

}  // namespace mergelab
