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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specspace/config.hpp"
#include "specspace/span.hpp"

namespace specspace {

/// Similarity invariants of a matrix space. Every field is preserved by
/// V -> P V P^{-1}.
struct InvariantProfile {
  std::size_t dim = 0;
  /// V V subset of V.
  bool mult_closed = false;
  /// Some member has rank 1 and trace 1.
  bool rank1_trace1 = false;
  /// dim Vx over all points [x] of P(K^n), sorted ascending.
  std::vector<std::size_t> image_profile;
  std::size_t good_count = 0;
  /// dim span of the nilpotent members; empty when q^dim is over budget.
  std::optional<std::size_t> nilpotent_span_dim;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

/// BudgetExceeded when the projective survey is over budget.
InvariantProfile invariant_battery(const MatSpace& v, const ExecConfig& config = {});

/// Name of the first profile field that differs, if any.
std::optional<std::string> distinguishing_invariant(const InvariantProfile& a, const InvariantProfile& b);

/// Exact test for a rank-1 trace-1 member: for each point [x], the rows l
/// with x.l in V form a subspace, and it meets {l.x = 1} iff l.x is not
/// identically zero on it.
bool has_rank1_trace1(const MatSpace& v, const ExecConfig& config = {});

/// Closed under products of basis pairs.
bool is_mult_closed(const MatSpace& v);

/// P V P^{-1} == W. SingularP when P is not invertible.
bool similar_witness(const MatSpace& v, const MatSpace& w, const Mat& p);

/// Calls fn(P) for each invertible P in odometer order over the row-major
/// entries until fn returns false; returns the number of invertibles seen.
std::uint64_t for_each_invertible(const Field& f, std::size_t n, const std::function<bool(const Mat&)>& fn);

/// The odometer-first P with P V P^{-1} == W, or none. BudgetExceeded when
/// |GL_n(q)| exceeds config.gl_limit.
std::optional<Mat> similar_brute(const MatSpace& v, const MatSpace& w, const ExecConfig& config = {});

/// P NT_n P^{-1} subset of NT_n. SingularP when P is not invertible.
bool normalizer_check(const Mat& p);

enum class Verdict { SimilarWithWitness, NotSimilar, Unknown };

struct SimilarityDecision {
  Verdict verdict = Verdict::Unknown;
  /// NotSimilar: the separating invariant, or "gl-scan" after an exhaustive scan.
  std::string reason;
  std::optional<Mat> witness;
  InvariantProfile left;
  InvariantProfile right;
};

/// Compares invariant profiles, then falls back to a GL_n(q) scan when it is
/// within budget. Similarity is only reported with a witness.
SimilarityDecision decide_similarity(const MatSpace& v, const MatSpace& w, const ExecConfig& config = {});

std::string to_string(Verdict v);

}  // namespace specspace
