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


#include "mergelab/layout.hpp"

#include <algorithm>
#include <set>

#include "mergelab/errors.hpp"

namespace mergelab {

std::string to_string(Role role) {
  switch (role) {
    case Role::sender: return "sender";
    case Role::receiverA: return "receiverA";
    case Role::receiverB: return "receiverB";
    case Role::reference: return "reference";
    case Role::ancilla: return "ancilla";
  }
  return "ancilla";
}

Role role_from_string(const std::string& s) {
  if (s == "sender") return Role::sender;
  if (s == "receiverA") return Role::receiverA;
  if (s == "receiverB") return Role::receiverB;
  if (s == "reference") return Role::reference;
  if (s == "ancilla") return Role::ancilla;
  throw InputError("unknown role '" + s + "'");
}

SystemLayout::SystemLayout(std::vector<Subsystem> subsystems) : subs_(std::move(subsystems)) {
  std::set<std::string> seen;
  for (const auto& s : subs_) {
    if (s.label.empty()) throw LayoutError("empty subsystem label");
    if (s.dim < 1) throw LayoutError("subsystem '" + s.label + "' has dim < 1");
    if (!seen.insert(s.label).second) throw LayoutError("duplicate label '" + s.label + "'");
  }
}

long SystemLayout::total_dim() const {
  long d = 1;
  for (const auto& s : subs_) d *= s.dim;
  return d;
}

bool SystemLayout::has(const std::string& label) const {
  return std::any_of(subs_.begin(), subs_.end(), [&](const Subsystem& s) { return s.label == label; });
}

int SystemLayout::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < subs_.size(); ++i)
    if (subs_[i].label == label) return static_cast<int>(i);
  throw LayoutError("unknown label '" + label + "'");
}

int SystemLayout::dim(const std::string& label) const { return subs_[index_of(label)].dim; }

long SystemLayout::dim_of(const std::vector<std::string>& labels) const {
  long d = 1;
  for (const auto& l : labels) d *= dim(l);
  return d;
}

std::vector<int> SystemLayout::dims() const {
  std::vector<int> out;
  for (const auto& s : subs_) out.push_back(s.dim);
  return out;
}

std::vector<std::string> SystemLayout::labels() const {
  std::vector<std::string> out;
  for (const auto& s : subs_) out.push_back(s.label);
  return out;
}

std::vector<std::string> SystemLayout::labels_with_role(Role role) const {
  std::vector<std::string> out;
  for (const auto& s : subs_)
    if (s.role == role) out.push_back(s.label);
  return out;
}

std::vector<std::string> SystemLayout::complement(const std::vector<std::string>& labels) const {
  for (const auto& l : labels) index_of(l);
  std::vector<std::string> out;
  for (const auto& s : subs_)
    if (std::find(labels.begin(), labels.end(), s.label) == labels.end()) out.push_back(s.label);
  return out;
}

SystemLayout SystemLayout::select(const std::vector<std::string>& labels) const {
  std::vector<Subsystem> out;
  for (const auto& l : labels) out.push_back(subs_[index_of(l)]);
  return SystemLayout(out);
}

SystemLayout SystemLayout::concat(const SystemLayout& other) const {
  std::vector<Subsystem> out = subs_;
  for (const auto& s : other.subs_) {
    if (has(s.label)) throw CompositionError("label collision on '" + s.label + "'");
    out.push_back(s);
  }
  return SystemLayout(out);
}

bool SystemLayout::operator==(const SystemLayout& other) const {
  if (subs_.size() != other.subs_.size()) return false;
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    const auto& a = subs_[i];
    const auto& b = other.subs_[i];
    if (a.label != b.label || a.dim != b.dim || a.role != b.role) return false;
  }
  return true;
}

}  // namespace mergelab
