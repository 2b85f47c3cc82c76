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
#include <string>
#include <string_view>
#include <vector>

#include "specspace/config.hpp"

namespace specspace {

enum class ClaimStatus { Verified, Refuted, Skipped };

std::string_view to_string(ClaimStatus s);

/// Serialized counterexample. Matrices are row-major lists of element
/// indices; the meaning of `values` depends on `kind`:
///   spec        spaces[0] checked exhaustively against `query`; `expected`
///               is the verdict the claim predicted
///   dim         values = {expected dimension} of spaces[0]
///   similar     matrices[0] conjugates spaces[0] onto spaces[1], which the
///               claim predicted to be non-similar
///   not-similar spaces[0], spaces[1] predicted similar; a full GL scan finds
///               no conjugator
///   trace-pair  matrices[0..1] are rank <= 1, trace 0 members of the 2-spec
///               space spaces[0] with tr(AB) != 0
///   span-bound  spaces[0] is 2-spec, values = {dim of the span of its rank-1
///               trace-0 members} exceeds n^2/2
///   cover       values = a vector of K^n (element indices) whose covering
///               status contradicts the claim
///   good-vector spaces[0] has no good vector
///   linear-form values = coordinates of a form on spaces[0] that satisfies
///               the hypothesis but is neither 0 nor the diagonal form
///   albc        values = (lambda, mu, f, g)
///   albc3       values = (a, b, c, d1, d2, d3)
///   degree4     values = (a, b, c) of t^4 + a t^2 + b t + c
///   two-by-two  values = (a, b, c)
///   hyperplane  values = a linear form on coordinates of spaces[0] whose
///               kernel holds only nilpotent members
///   normalizer  matrices[0] disagrees between the normalizer test and
///               upper-triangularity
///   charpoly    matrices[0] with expected charpoly coefficients in values
///   profile     spaces[0], spaces[1] share the invariant named in `note`
///   image       spaces[0] with vector values violating the bound in `note`
///   reduced     spaces[0] fails the predicate named in `note`
///   singular    spaces[0] is not spanned by its singular members
///   exceeds     spaces[0] satisfies `query` with dimension above values[0]
struct Witness {
  std::string kind;
  std::string field;
  std::size_t n = 0;
  std::vector<std::string> spaces;
  std::vector<std::vector<std::uint64_t>> matrices;
  std::string query;
  std::vector<std::uint64_t> values;
  bool expected = true;
  std::string note;
};

struct ClaimResult {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::Skipped;
  std::string reason;  // why Skipped / Refuted
  std::string scale;   // n, q and enumeration mode covered
  std::optional<Witness> witness;
  std::uint64_t runtime_ms = 0;
  std::string anchor;
  std::string detail;
};

struct ClaimInfo {
  std::string id;
  std::vector<std::string> tags;
  std::string anchor;
};

/// Overrides narrow a claim to one field order and/or matrix size; values
/// outside the claim's domain make it Skipped.
struct ClaimParams {
  std::optional<std::uint64_t> q;
  std::optional<std::size_t> n;
  std::uint64_t seed = 0;
  ExecConfig config;
};

/// The fixed registry, in report order.
const std::vector<ClaimInfo>& claim_registry();

/// UnknownClaim for ids outside the registry. BudgetExceeded inside a claim
/// yields Skipped.
ClaimResult run_claim(std::string_view claim_id, const ClaimParams& params = {});

struct Report {
  std::vector<ClaimResult> results;
  std::size_t verified = 0;
  std::size_t refuted = 0;
  std::size_t skipped = 0;

  bool ok() const { return refuted == 0; }
};

/// Claims carrying at least one of `tags` (all claims when empty), plus the
/// explicitly listed `ids`, in registry order.
Report run_all(const std::vector<std::string>& tags, const ClaimParams& params = {},
               const std::vector<std::string>& ids = {});

/// JSON report; runtime_ms is written as 0 when `with_runtime` is false so
/// repeated runs are byte-identical.
std::string to_json(const Report& report, bool with_runtime = true);

/// Re-derives the refutation from the serialized witness alone. True iff the
/// witness still contradicts the claim.
bool recheck_witness(const Witness& w, const ExecConfig& config = {});

}  // namespace specspace
