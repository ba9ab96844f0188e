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

#include <iosfwd>
#include <string>
#include <vector>

namespace mergelab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 2;
inline constexpr int kExitInput = 3;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};
std::vector<CheckResult> run_selftest(bool quick);

}  // namespace mergelab
