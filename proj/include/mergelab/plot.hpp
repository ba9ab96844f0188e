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

#include <string>
#include <utility>
#include <vector>

namespace mergelab {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
  bool connect = true;
};

std::string render_svg(const std::vector<Series>& series, const std::string& title,
                       const std::string& xlabel = "R1 (bits)",
                       const std::string& ylabel = "R2 (bits)");
void emit_plot(const std::vector<Series>& series, const std::string& path,
               const std::string& title, const std::string& xlabel = "R1 (bits)",
               const std::string& ylabel = "R2 (bits)");

}  // namespace mergelab
