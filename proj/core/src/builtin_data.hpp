// Copyright 2026 The ionscatter Authors.
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


#ifndef IONSCATTER_BUILTIN_DATA_HPP
#define IONSCATTER_BUILTIN_DATA_HPP

#include <cstddef>

namespace ionscatter::detail {

struct BuiltinDataset {
  const char* name;
  const char* json;
};

extern const BuiltinDataset kBuiltinDatasets[];
extern const std::size_t kBuiltinDatasetCount;

}  // namespace ionscatter::detail

#endif
