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

#include <json.hpp>

#include "mergelab/state.hpp"

namespace mergelab {

nlohmann::json state_to_json(const QuantumState& s);
QuantumState state_from_json(const nlohmann::json& j);
QuantumState read_state_file(const std::string& path);
void write_state_file(const QuantumState& s, const std::string& path);

}  // namespace mergelab
