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
#include <optional>
#include <vector>

#include "specspace/config.hpp"
#include "specspace/span.hpp"

namespace specspace {

struct GrowOptions {
  /// Number of candidate matrices drawn.
  std::uint64_t budget = 0;
  std::uint64_t rng_seed = 0;
  /// Consecutive rejections before the first restart; doubles after each.
  std::uint64_t initial_patience = 16;
  ExecConfig config;
};

struct GrowResult {
  MatSpace best;
  std::uint64_t iterations = 0;
  std::uint64_t accepted = 0;
  /// Iteration indices at which the walk restarted from the seed.
  std::vector<std::uint64_t> restarts;
  /// True when growth stopped because an incremental check was over budget.
  bool truncated = false;
};

/// Greedy randomized growth: draw a uniform matrix, keep it when every new
/// member of span(V, M) satisfies `query`, restart from the seed after a run
/// of rejections. Draw i depends only on (rng_seed, i), so a larger budget
/// extends the same walk. SeedViolatesQuery when the seed fails the query.
GrowResult grow(const MatSpace& seed, const SpectrumQuery& query, const GrowOptions& options);

/// Matrices M, one per line of the quotient M_n / V (leading coefficient 1
/// over the complement spanned by non-pivot unit matrices), such that
/// span(V, M) satisfies `query`. Empty iff no one-step extension exists.
/// BudgetExceeded when q^(n^2 - dim) exceeds config.coset_limit;
/// SeedViolatesQuery when V itself fails.
std::vector<Mat> completion_candidates(const MatSpace& v, const SpectrumQuery& query, const ExecConfig& config = {});

/// Unit-matrix positions (row-major index) outside the pivot set of V; the
/// corresponding unit matrices span a complement of V.
std::vector<std::size_t> complement_positions(const MatSpace& v);

/// Best known upper bound on the dimension for the class, from the proved
/// theorems (characteristic not 2) or the stated conjectures (characteristic
/// 2, more than 2 elements). Empty when none applies.
std::optional<std::size_t> known_dimension_bound(std::size_t n, const Field& field, const SpectrumQuery& query);

}  // namespace specspace
