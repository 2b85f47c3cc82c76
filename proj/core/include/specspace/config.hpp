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

#pragma once

#include <cstdint>

namespace specspace {

/// Budgets and parallelism shared by every enumeration routine.
struct ExecConfig {
  /// Maximum number of members an exhaustive spectrum check may visit.
  std::uint64_t exhaustive_limit = 10'000'000;
  /// Maximum number of projective points a good-vector or image survey visits.
  std::uint64_t survey_limit = 1'000'000;
  /// Maximum |GL_n(q)| for brute-force similarity scans.
  std::uint64_t gl_limit = 1'000'000;
  /// Maximum number of cosets a completion scan visits.
  std::uint64_t coset_limit = 100'000;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;

  unsigned resolved_threads() const;

  /// Defaults, with `SPECSPACE_BUDGET` (if set) overriding exhaustive_limit.
  static ExecConfig from_environment();
};

}  // namespace specspace
