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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "oracles.hpp"
#include "specspace/families.hpp"
#include "specspace/probe.hpp"
#include "specspace/verify.hpp"

namespace {

using namespace specspace;
using FD = FamilyDescriptor;
using ::testing::HasSubstr;

ClaimParams at(std::optional<std::uint64_t> q, std::optional<std::size_t> n = std::nullopt) {
  ClaimParams p;
  p.q = q;
  p.n = n;
  return p;
}

std::vector<std::uint64_t> indices(const Mat& m) {
  std::vector<std::uint64_t> out;
  for (auto e : m.entries()) out.push_back(e.v);
  return out;
}

TEST(Registry, ContainsEveryClaimOnce) {
  const auto& reg = claim_registry();
  std::set<std::string> ids;
  for (const auto& c : reg) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.tags.empty()) << c.id;
    EXPECT_FALSE(c.anchor.empty()) << c.id;
  }
  for (const char* id : {"thm-1star-bound-attained", "thm-2spec-bound-attained", "maximality-1star", "maximality-2spec",
                         "char2-counterexample-1star", "char2-counterexample-2spec", "trace-lemma", "covering-remark",
                         "good-vector-existence", "uniqueness-v1star", "uniqueness-v2", "normalizer", "lemma-2x2",
                         "linear-form-lemma", "lemma-ALBC", "char3-ALBC", "char3-degree4", "spansingular",
                         "nilpotent-hyperplane", "charpoly-corner-identity"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
}

TEST(RunClaim, Examples) {
  const auto d4 = run_claim("char3-degree4", at(3));
  EXPECT_EQ(d4.status, ClaimStatus::Verified);
  EXPECT_THAT(d4.detail, HasSubstr("27 tuples"));
  // independent count of t^4 + a t^2 + b t + c with at most two closure roots
  const Field f3 = Field::of_order(3);
  std::size_t few = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) few += oracle::closure_roots_by_factoring(Poly::from_ints(f3, {c, b, a, 0, 1})) <= 2;
  EXPECT_THAT(d4.detail, HasSubstr(std::to_string(few) + " with at most two closure roots"));

  const auto cover = run_claim("covering-remark", at(3, 3));
  EXPECT_EQ(cover.status, ClaimStatus::Verified);
  EXPECT_THAT(cover.detail, HasSubstr("uncovered 2"));

  const auto max = run_claim("maximality-1star", at(3, 3));
  EXPECT_EQ(max.status, ClaimStatus::Verified);
  EXPECT_THAT(max.detail, HasSubstr(std::to_string(oracle::ipow(3, 9 - 4) - 1) + " nonzero cosets"));

  EXPECT_EQ(run_claim("lemma-2x2", at(101)).status, ClaimStatus::Verified);
  EXPECT_EQ(run_claim("char3-degree4", at(5)).status, ClaimStatus::Skipped);
}

TEST(RunClaim, CharThreeAlbcHypothesisFailsOverGF3) {
  const auto r = run_claim("char3-ALBC", at(3));
  ASSERT_EQ(r.status, ClaimStatus::Refuted);
  ASSERT_TRUE(r.witness);
  const Witness& w = *r.witness;
  EXPECT_EQ(w.kind, "albc3");
  EXPECT_EQ(w.note, "b");
  EXPECT_TRUE(recheck_witness(w));
  ASSERT_EQ(w.values.size(), 6u);
  // D + xA + yB must have only 0 and 1 as closure eigenvalues for every x, y,
  // while (a, b, c) != 0: checked here from the definitions.
  const Field f = Field::parse(w.field);
  const Fe a = f.element(w.values[0]), b = f.element(w.values[1]), c = f.element(w.values[2]);
  EXPECT_FALSE(a == Fe{} && b == Fe{} && c == Fe{});
  Mat ma(f, 3), mb(f, 3), md(f, 3);
  ma.set(0, 1, f.one());
  ma.set(2, 0, a);
  mb.set(1, 2, f.one());
  mb.set(2, 0, b);
  for (std::size_t i = 0; i < 3; ++i) md.set(i, i, f.element(w.values[3 + i]));
  md.set(2, 0, c);
  std::vector<Poly> allowed;
  for (int zeros = 0; zeros <= 3; ++zeros) {
    Poly p = Poly::constant(f, f.one());
    for (int i = 0; i < 3; ++i) p = p * (i < zeros ? Poly::from_ints(f, {0, 1}) : Poly::from_ints(f, {-1, 1}));
    allowed.push_back(p);
  }
  for (std::uint64_t x = 0; x < f.order(); ++x)
    for (std::uint64_t y = 0; y < f.order(); ++y) {
      const Poly cp = oracle::cofactor_charpoly(md + ma.scaled(f.element(x)) + mb.scaled(f.element(y)));
      EXPECT_NE(std::find(allowed.begin(), allowed.end(), cp), allowed.end()) << cp.to_string();
    }
  // over GF(9) the statement holds
  EXPECT_EQ(run_claim("char3-ALBC", at(9)).status, ClaimStatus::Verified);
}

TEST(RunClaim, UnknownIdsAndTags) {
  try {
    run_claim("no-such-claim");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownClaim);
  }
  const Report empty = run_all({"nonexistent-tag"});
  EXPECT_TRUE(empty.results.empty());
  EXPECT_TRUE(empty.ok());
  EXPECT_THROW(run_all({}, {}, {"no-such-claim"}), Error);
  const Report one = run_all({"nonexistent-tag"}, {}, {"normalizer"});
  ASSERT_EQ(one.results.size(), 1u);
  EXPECT_EQ(one.results[0].claim_id, "normalizer");
}

TEST(RunAll, CharThreeBattery) {
  const Report r = run_all({"char3"});
  std::set<std::string> ids;
  for (const auto& c : r.results) ids.insert(c.claim_id);
  EXPECT_EQ(ids, (std::set<std::string>{"w-family-uniqueness-invariants", "transitivity-lemma", "char3-ALBC", "char3-degree4",
                                        "exceptional-catalog", "spansingular", "nilpotent-hyperplane"}));
  for (const auto& c : r.results) {
    if (c.claim_id == "char3-ALBC") {
      EXPECT_EQ(c.status, ClaimStatus::Refuted);
    } else {
      EXPECT_EQ(c.status, ClaimStatus::Verified) << c.claim_id << ": " << c.reason;
    }
  }
  EXPECT_EQ(r.verified + r.refuted + r.skipped, r.results.size());
  EXPECT_EQ(r.refuted, 1u);
}

TEST(Json, DeterministicWithoutRuntime) {
  const Report a = run_all({"char2"});
  const Report b = run_all({"char2"});
  const std::string ja = to_json(a, false);
  EXPECT_EQ(ja, to_json(b, false));
  const auto doc = nlohmann::json::parse(ja);
  ASSERT_EQ(doc["claims"].size(), a.results.size());
  for (const auto& c : doc["claims"]) {
    EXPECT_TRUE(c.contains("claim_id"));
    EXPECT_TRUE(c.contains("status"));
    EXPECT_TRUE(c.contains("scale"));
    EXPECT_TRUE(c.contains("anchor"));
    EXPECT_EQ(c["runtime_ms"], 0);
  }
  EXPECT_EQ(doc["summary"]["verified"], a.verified);
  EXPECT_EQ(doc["summary"]["refuted"], a.refuted);
  EXPECT_EQ(doc["summary"]["skipped"], a.skipped);
}

TEST(Json, RefutedClaimsCarryWitness) {
  const auto doc = nlohmann::json::parse(to_json(run_all({}, {}, {"char3-ALBC"}), false));
  const auto& c = doc["claims"][0];
  EXPECT_EQ(c["status"], "Refuted");
  EXPECT_EQ(c["witness"]["kind"], "albc3");
  EXPECT_EQ(c["witness"]["values"].size(), 6u);
}

TEST(Recheck, CraftedWitnesses) {
  const Field f3 = Field::of_order(3);
  Witness spec;
  spec.kind = "spec";
  spec.field = "GF(3)";
  spec.n = 2;
  spec.spaces = {format_space(build(FD::nt(2), f3))};
  spec.query = "kstar-closure:0";
  spec.expected = true;
  EXPECT_FALSE(recheck_witness(spec));
  spec.expected = false;
  EXPECT_TRUE(recheck_witness(spec));
  spec.spaces = {format_space(MatSpace::full(f3, 2))};
  spec.matrices = {indices(Mat::identity(f3, 2))};
  spec.expected = true;  // I_2 has the nonzero eigenvalue 1
  EXPECT_TRUE(recheck_witness(spec));
  spec.matrices = {indices(Mat::unit(f3, 2, 0, 1))};  // nilpotent: not a witness
  EXPECT_FALSE(recheck_witness(spec));

  Witness dim;
  dim.kind = "dim";
  dim.field = "GF(3)";
  dim.n = 3;
  dim.spaces = {format_space(build(FD::nt(3), f3))};
  dim.values = {3};
  EXPECT_FALSE(recheck_witness(dim));
  dim.values = {4};
  EXPECT_TRUE(recheck_witness(dim));

  Witness norm;
  norm.kind = "normalizer";
  norm.field = "GF(3)";
  norm.n = 2;
  norm.matrices = {indices(Mat::from_ints(f3, 2, {0, 1, 1, 0}))};
  EXPECT_FALSE(recheck_witness(norm));

  const Mat corner = Mat::from_ints(f3, 3, {0, 0, 1, 0, 0, 0, 1, 0, 0});
  Witness cp;
  cp.kind = "charpoly";
  cp.field = "GF(3)";
  cp.n = 3;
  cp.matrices = {indices(corner)};
  const Poly expected = oracle::cofactor_charpoly(corner);
  for (auto e : expected.coeffs()) cp.values.push_back(e.v);
  EXPECT_FALSE(recheck_witness(cp));
  cp.values = {0, 1, 0, 1};  // t^3 + t
  EXPECT_TRUE(recheck_witness(cp));

  Witness similar;
  similar.kind = "similar";
  similar.field = "GF(3)";
  similar.n = 2;
  similar.expected = false;
  similar.spaces = {format_space(build(FD::v1star(2, {1}), f3)), format_space(build(FD::v1star(2, {2}), f3))};
  similar.matrices = {indices(Mat::identity(f3, 2))};
  EXPECT_FALSE(recheck_witness(similar));
  similar.spaces[1] = similar.spaces[0];
  EXPECT_TRUE(recheck_witness(similar));

  Witness exceeds;
  exceeds.kind = "exceeds";
  exceeds.field = "GF(4)";
  exceeds.n = 3;
  exceeds.query = "kstar-closure:1";
  exceeds.spaces = {format_space(build(FD::vee(FD::sl(2), FD::nt(1)), Field::of_order(4)))};
  exceeds.values = {4};
  EXPECT_TRUE(recheck_witness(exceeds));
  exceeds.values = {5};
  EXPECT_FALSE(recheck_witness(exceeds));
}

}  // namespace
