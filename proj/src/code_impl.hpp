// Copyright 2026 The perfcodes Authors
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

#include <mutex>
#include <vector>

#include "perfcodes/code.hpp"

namespace perfcodes {

struct Code::Impl {
  // Dense word -> index table for short lengths; -1 marks non-members.
  std::vector<std::int32_t> dense;

  mutable std::once_flag rank_once;
  mutable int rank = -1;
  mutable std::once_flag kernel_once;
  mutable std::vector<Word> kernel;
};

}  // namespace perfcodes
