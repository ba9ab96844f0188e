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

#include <cstdint>
#include <string>
#include <vector>

namespace mergelab {

enum class Role { sender, receiverA, receiverB, reference, ancilla };

std::string to_string(Role role);
Role role_from_string(const std::string& s);

struct Subsystem {
  std::string label;
  int dim = 1;
  Role role = Role::ancilla;
};

class SystemLayout {
 public:
  SystemLayout() = default;
  explicit SystemLayout(std::vector<Subsystem> subsystems);

  const std::vector<Subsystem>& subsystems() const { return subs_; }
  const Subsystem& operator[](std::size_t i) const { return subs_[i]; }
  std::size_t size() const { return subs_.size(); }
  bool empty() const { return subs_.empty(); }

  long total_dim() const;
  bool has(const std::string& label) const;
  int index_of(const std::string& label) const;
  int dim(const std::string& label) const;
  long dim_of(const std::vector<std::string>& labels) const;
  std::vector<int> dims() const;

  std::vector<std::string> labels() const;
  std::vector<std::string> labels_with_role(Role role) const;
  std::vector<std::string> complement(const std::vector<std::string>& labels) const;

  SystemLayout select(const std::vector<std::string>& labels) const;
  SystemLayout concat(const SystemLayout& other) const;

  bool operator==(const SystemLayout& other) const;

 private:
  std::vector<Subsystem> subs_;
};

}  // namespace mergelab
