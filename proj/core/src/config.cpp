// Copyright 2026 The specspace Authors.
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

#include "specspace/config.hpp"

#include <cstdlib>
#include <string_view>
#include <thread>

#include "text_util.hpp"

namespace specspace {

unsigned ExecConfig::resolved_threads() const {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

ExecConfig ExecConfig::from_environment() {
  ExecConfig cfg;
  if (const char* env = std::getenv("SPECSPACE_BUDGET")) {
    std::uint64_t v = 0;
    if (text::parse_u64(text::trim(env), v)) cfg.exhaustive_limit = v;
  }
  return cfg;
}

}  // namespace specspace
