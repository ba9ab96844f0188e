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

#include <stdexcept>
#include <string>

namespace mergelab {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MERGELAB_ERROR(Name)                                  \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& what) : Error(what) {}   \
  }

MERGELAB_ERROR(LayoutError);
MERGELAB_ERROR(CompositionError);
MERGELAB_ERROR(NormalizationError);
MERGELAB_ERROR(KindError);
MERGELAB_ERROR(DimensionError);
MERGELAB_ERROR(SupportError);
MERGELAB_ERROR(ScaleError);
MERGELAB_ERROR(RankError);
MERGELAB_ERROR(InputError);
MERGELAB_ERROR(ScopeError);

#undef MERGELAB_ERROR

}  // namespace mergelab
