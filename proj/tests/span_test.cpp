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

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "specspace/enumerate.hpp"
#include "specspace/families.hpp"
#include "specspace/span.hpp"

namespace {

using namespace specspace;
using FD = FamilyDescriptor;

Mat E(const Field& f, std::size_t n, std::size_t i, std::size_t j) { return Mat::unit(f, n, i - 1, j - 1); }

MatSpace span_of(std::initializer_list<Mat> mats) {
  std::vector<Mat> v(mats);
  return MatSpace::from_matrices(v);
}

/// x is bad iff some trace-0 member has image exactly K x.
bool bad_by_enumeration(const MatSpace& v, std::span<const Fe> x) {
  const Field& f = v.field();
  bool bad = false;
  oracle::for_each_combination(v, [&](const Mat& u) {
    if (bad || u.is_zero() || u.trace() != Fe{} || u.rank() != 1) return;
    std::vector<Vec> cols{Vec(x.begin(), x.end())};
    for (std::size_t j = 0; j < v.n(); ++j) {
      Vec c;
      for (std::size_t i = 0; i < v.n(); ++i) c.push_back(u.at(i, j));
      cols.push_back(c);
    }
    if (oracle::span_dim(f, cols) == 1) bad = true;
  });
  return bad;
}

TEST(MatSpace, DimensionExamples) {
  const Field f3 = Field::of_order(3);
  EXPECT_EQ(span_of({E(f3, 2, 1, 2), E(f3, 2, 1, 2).scaled(f3.from_int(2))}).dim(), 1u);
  EXPECT_EQ(build(FD::nt(3), f3).dim(), 3u);
  const Field f5 = Field::of_order(5);
  EXPECT_EQ(span_of({Mat::identity(f5, 2), E(f5, 2, 1, 1)}), span_of({E(f5, 2, 1, 1), E(f5, 2, 2, 2)}));
  EXPECT_EQ(span_of({Mat::identity(f5, 2), E(f5, 2, 1, 1)}).rows(), span_of({E(f5, 2, 1, 1), E(f5, 2, 2, 2)}).rows());
}

TEST(MatSpace, OperationExamples) {
  const Field f3 = Field::of_order(3);
  EXPECT_EQ(conjugate(build(FD::nt(2), f3), Mat::from_ints(f3, 2, {1, 1, 0, 1})), build(FD::nt(2), f3));
  EXPECT_EQ(intersect(build(FD::v1star(2, {1}), f3), build(FD::v1star(2, {2}), f3)), build(FD::nt(2), f3));
  EXPECT_FALSE(build(FD::sl(2), f3).contains(Mat::identity(f3, 2)));
  EXPECT_TRUE(build(FD::sl(2), f3).contains(E(f3, 2, 2, 1)));
}

TEST(MatSpace, SumIntersectionAndAnnihilatorAgreeWithOracle) {
  Rng rng(21);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 1 + rng.below(3);
      const MatSpace a = oracle::random_space(f, n, rng.below(n * n + 1), rng);
      const MatSpace b = oracle::random_space(f, n, rng.below(n * n + 1), rng);
      std::vector<Vec> both = a.rows();
      both.insert(both.end(), b.rows().begin(), b.rows().end());
      const MatSpace s = sum(a, b), i = intersect(a, b);
      EXPECT_EQ(s.dim(), oracle::span_dim(f, both));
      EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
      for (const auto& m : i.basis_matrices()) {
        EXPECT_TRUE(a.contains(m));
        EXPECT_TRUE(b.contains(m));
      }
      EXPECT_EQ(a.annihilator().size() + a.dim(), n * n);
      for (const auto& form : a.annihilator())
        for (const auto& row : a.rows()) {
          Fe dot{};
          for (std::size_t k = 0; k < row.size(); ++k) dot = f.add(dot, f.mul(form[k], row[k]));
          ASSERT_EQ(dot, Fe{});
        }
      EXPECT_EQ(transpose(transpose(a)), a);
    }
  }
}

TEST(MatSpace, CoordinatesRoundTrip) {
  Rng rng(22);
  const Field f = Field::of_order(9);
  for (int t = 0; t < 100; ++t) {
    const MatSpace v = oracle::random_space(f, 3, 1 + rng.below(6), rng);
    Vec c(v.dim());
    for (auto& e : c) e = f.element(rng.below(9));
    const Mat m = v.member(c);
    EXPECT_TRUE(v.contains(m));
    EXPECT_EQ(v.coordinates(m), c);
    const Mat outside = oracle::random_matrix(f, 3, rng);
    EXPECT_EQ(v.coordinates(outside).has_value(), v.contains(outside));
  }
}

TEST(MatSpace, RejectsMixedInput) {
  const Field f3 = Field::of_order(3);
  EXPECT_THROW(MatSpace(f3, 2, {Vec(3)}), Error);
  EXPECT_THROW(span_of({Mat::identity(f3, 2), Mat::identity(Field::of_order(5), 2)}), Error);
  EXPECT_THROW(span_of({Mat::identity(f3, 2), Mat::identity(f3, 3)}), Error);
}

TEST(MatSpaceProperty, CanonicalFormIgnoresGeneratorChoice) {
  Rng rng(23);
  for (std::uint64_t q : {2, 3, 4, 5})
    for (std::size_t n = 1; n <= 4; ++n) {
      const Field f = Field::of_order(q);
      for (int t = 0; t < 1000 / static_cast<int>(n); ++t) {
        std::vector<Mat> gens;
        for (std::size_t g = 0, k = 1 + rng.below(4); g < k; ++g) gens.push_back(oracle::random_matrix(f, n, rng));
        const MatSpace base = MatSpace::from_matrices(gens);
        std::vector<Mat> mixed = gens;
        std::shuffle(mixed.begin(), mixed.end(), rng);
        for (auto& m : mixed) {
          const Fe c = f.element(1 + rng.below(q - 1));
          m = m.scaled(c);
        }
        const std::size_t a = rng.below(mixed.size()), b = rng.below(mixed.size());
        if (a != b) mixed[a] = mixed[a] + mixed[b].scaled(f.element(rng.below(q)));
        mixed.push_back(mixed[0] + mixed.back());  // a redundant generator
        ASSERT_EQ(MatSpace::from_matrices(mixed), base);
        ASSERT_EQ(MatSpace::from_matrices(mixed).rows(), base.rows());
      }
    }
}

TEST(MemberCursor, VisitsEveryMemberOnce) {
  const Field f = Field::of_order(4);
  const MatSpace v = build(FD::v1star(2, {1}), f);
  std::vector<Vec> seen;
  for_each_member(v, [&](std::span<const Fe> e) {
    seen.emplace_back(e.begin(), e.end());
    return true;
  });
  ASSERT_EQ(seen.size(), 16u);
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
  MemberCursor proj(v, true);
  EXPECT_EQ(proj.size(), projective_count(4, 2) + 1);
}

TEST(CheckSpec, Examples) {
  const Field f3 = Field::of_order(3);
  const auto r = check_spec(build(FD::v2(3, {1}), f3), {2, Location::Closure, false}, CheckMode::exhaustive());
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.members_total, 243u);
  EXPECT_EQ(r.members_covered, 243u);
  EXPECT_EQ(r.coverage, Coverage::Full);

  const Field f5 = Field::of_order(5);
  const auto w = check_spec(span_of({E(f5, 3, 1, 2), E(f5, 3, 2, 1)}), {2, Location::BaseField, false}, CheckMode::exhaustive());
  EXPECT_FALSE(w.holds);
  ASSERT_TRUE(w.witness);
  EXPECT_EQ(count_eigs(*w.witness, {2, Location::BaseField, false}).count, 3u);
  EXPECT_EQ(*w.witness, E(f5, 3, 1, 2) + E(f5, 3, 2, 1));

  EXPECT_TRUE(check_spec(build(FD::nt(4), Field::of_order(2)), {0, Location::Closure, true}, CheckMode::exhaustive()).holds);
}

TEST(CheckSpec, BudgetAndSampling) {
  const Field f5 = Field::of_order(5);
  const MatSpace big = build(FD::v2(4, {1}), f5);  // 5^8 members
  ExecConfig tight;
  tight.exhaustive_limit = 1000;
  EXPECT_THROW(check_spec(big, {2, Location::Closure, false}, CheckMode::exhaustive(), tight), Error);
  const auto s = check_spec(big, {2, Location::Closure, false}, CheckMode::automatic(0, 500, 1), tight);
  EXPECT_TRUE(s.holds);
  EXPECT_EQ(s.coverage, Coverage::Sampled);
  EXPECT_EQ(s.members_covered, 500u);
  const auto bad = check_spec(MatSpace::full(f5, 3), {2, Location::Closure, false}, CheckMode::sampled(2000, 3));
  EXPECT_FALSE(bad.holds);
  ASSERT_TRUE(bad.witness);
  EXPECT_GT(count_eigs(*bad.witness, {2, Location::Closure, false}).count, 2u);
}

TEST(CheckSpecProperty, AgreesWithBruteForceOracle) {
  Rng rng(24);
  for (std::uint64_t q : {2, 3, 4}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 + rng.below(2);
      const MatSpace v = oracle::random_space(f, n, 1 + rng.below(3), rng);
      for (const SpectrumQuery query : {SpectrumQuery{1, Location::Closure, true}, SpectrumQuery{2, Location::BaseField, false},
                                        SpectrumQuery{2, Location::Closure, false}}) {
        const auto r = check_spec(v, query, CheckMode::exhaustive());
        ASSERT_EQ(r.holds, oracle::spec_holds(v, query)) << format_space(v) << query.to_string();
        if (!r.holds) {
          ASSERT_TRUE(v.contains(*r.witness));
          ASSERT_GT(oracle::eig_count(*r.witness, query), query.bound);
        }
      }
    }
  }
}

TEST(CheckSpecProperty, IncrementalExtensionMatchesFullCheck) {
  Rng rng(25);
  const Field f = Field::of_order(3);
  const SpectrumQuery query{2, Location::Closure, false};
  for (int t = 0; t < 80; ++t) {
    const MatSpace v = build(FD::v2(3, {1 + rng.below(3)}), f);
    const Mat m = oracle::random_matrix(f, 3, rng);
    if (v.contains(m)) continue;
    const auto inc = check_extension(v, m, query);
    EXPECT_EQ(inc.holds, check_spec(extend(v, m), query, CheckMode::exhaustive()).holds);
    if (!inc.holds) {
      EXPECT_TRUE(extend(v, m).contains(*inc.witness));
    }
  }
}

TEST(CheckSpecProperty, ConjugationInvariant) {
  Rng rng(26);
  for (std::uint64_t q : {2, 3, 5}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 60; ++t) {
      const MatSpace v = oracle::random_space(f, 3, 1 + rng.below(3), rng);
      const Mat p = oracle::random_invertible(f, 3, rng);
      for (const SpectrumQuery query : {SpectrumQuery{1, Location::Closure, true}, SpectrumQuery{2, Location::BaseField, false}}) {
        ASSERT_EQ(check_spec(v, query, CheckMode::exhaustive()).holds,
                  check_spec(conjugate(v, p), query, CheckMode::exhaustive()).holds);
      }
    }
  }
}

TEST(CheckSpecProperty, StarredBoundImpliesNextPlainBound) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field f = Field::of_order(q);
    std::vector<MatSpace> family{build(FD::nt(3), f), build(FD::v1star(3, {1}), f), build(FD::v1star(3, {1, 2, 3}), f),
                                 build(FD::v2(3, {2}), f), build(FD::sl(2), f), build(FD::loewy_radwan(3, 2), f)};
    for (const auto& v : family)
      for (unsigned k = 0; k <= 2; ++k)
        for (auto loc : {Location::BaseField, Location::Closure}) {
          if (!check_spec(v, {k, loc, true}, CheckMode::exhaustive()).holds) continue;
          EXPECT_TRUE(check_spec(v, {k + 1, loc, false}, CheckMode::exhaustive()).holds);
        }
  }
}

TEST(CheckSpecProperty, RankOneTraceZeroMembersOfTwoSpecSpacesAreTraceOrthogonal) {
  Rng rng(27);
  std::size_t spaces = 0;
  for (std::uint64_t q : {3, 5}) {
    const Field f = Field::of_order(q);
    std::vector<MatSpace> pool;
    for (std::size_t i = 1; i <= 3; ++i) pool.push_back(build(FD::v2(3, {i}), f));
    for (int t = 0; t < 300; ++t) {
      std::vector<Mat> gens;
      for (std::size_t g = 0, k = 2 + rng.below(3); g < k; ++g) {
        Mat m(f, 3);
        for (auto& e : m.entries())
          if (rng.below(3) == 0) e = f.element(rng.below(q));
        gens.push_back(m);
      }
      pool.push_back(MatSpace::from_matrices(f, 3, gens));
    }
    for (const auto& v : pool) {
      if (oracle::ipow(q, v.dim()) > 100000) continue;
      if (!check_spec(v, {2, Location::BaseField, false}, CheckMode::exhaustive()).holds) continue;
      ++spaces;
      std::vector<Mat> r1;
      oracle::for_each_combination(v, [&](const Mat& m) {
        if (!m.is_zero() && m.rank() == 1 && m.trace() == Fe{}) r1.push_back(m);
      });
      for (const auto& a : r1)
        for (const auto& b : r1) ASSERT_EQ((a * b).trace(), Fe{}) << format_space(v);
    }
  }
  EXPECT_GT(spaces, 20u);
}

TEST(GoodVector, Examples) {
  const Field f3 = Field::of_order(3);
  const Vec e1{f3.one(), f3.zero()}, e2{f3.zero(), f3.one()};
  EXPECT_FALSE(good_vector(build(FD::v1star(2, {1}), f3), e1).is_good);
  const MatSpace v12 = build(FD::v1star(2, {1, 2}), f3);
  EXPECT_TRUE(good_vector(v12, e2).is_good);
  EXPECT_THROW(good_vector(v12, Vec{f3.zero(), f3.zero()}), Error);
  const auto survey = good_vector_survey(v12);
  ASSERT_EQ(survey.size(), 4u);
  std::vector<Vec> bad;
  for (const auto& r : survey)
    if (!r.is_good) bad.push_back(r.vector);
  EXPECT_EQ(bad, std::vector<Vec>{e1});
  for (std::uint64_t q : {4}) {
    const auto s = good_vector_survey(build(FD::sl(2), Field::of_order(q)));
    EXPECT_TRUE(std::none_of(s.begin(), s.end(), [](const auto& r) { return r.is_good; }));
  }
}

TEST(GoodVectorProperty, MatchesEnumerationAndWitnesses) {
  Rng rng(28);
  for (std::uint64_t q : {2, 3, 4}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 2 + rng.below(2);
      const MatSpace v = rng.below(2) ? oracle::random_space(f, n, 1 + rng.below(4), rng)
                                      : build(FD::v1star(n, {1 + rng.below(n)}), f);
      for (const auto& r : good_vector_survey(v)) {
        ASSERT_EQ(r.is_good, !bad_by_enumeration(v, r.vector));
        if (r.is_good) continue;
        ASSERT_TRUE(r.witness);
        Mat u(f, n);
        Fe dot{};
        for (std::size_t i = 0; i < n; ++i) {
          dot = f.add(dot, f.mul((*r.witness)[i], r.vector[i]));
          for (std::size_t j = 0; j < n; ++j) u.set(i, j, f.mul(r.vector[i], (*r.witness)[j]));
        }
        ASSERT_EQ(dot, Fe{});
        ASSERT_TRUE(v.contains(u));
      }
    }
  }
}

TEST(GoodVectorProperty, ConjugationEquivariant) {
  Rng rng(29);
  for (std::uint64_t q : {3, 5}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 30; ++t) {
      const MatSpace v = build(t % 2 ? FD::v1star(3, {1 + rng.below(3)}) : FD::v2(3, {1 + rng.below(3)}), f);
      const Mat p = oracle::random_invertible(f, 3, rng);
      const MatSpace w = conjugate(v, p);
      for (std::uint64_t r = 0; r < projective_count(q, 3); ++r) {
        const Vec x = projective_point(f, 3, r);
        ASSERT_EQ(good_vector(v, x).is_good, good_vector(w, p.apply(x)).is_good);
      }
    }
  }
}

TEST(ImageDim, Examples) {
  const Field f3 = Field::of_order(3);
  const Vec e1{f3.one(), f3.zero(), f3.zero(), f3.zero()};
  for (const auto& I : std::vector<std::vector<std::size_t>>{{1}, {2}, {1, 3}})
    EXPECT_EQ(image_dim(build(FD::v2(4, I), f3), e1), 1u);
  EXPECT_EQ(image_dim(build(FD::g4(), f3), e1), 2u);
  EXPECT_EQ(image_dim(build(FD::g4(), f3), Vec(4, f3.zero())), 0u);
}

TEST(SpaceFile, RoundTripIsByteIdentical) {
  Rng rng(30);
  for (std::uint64_t q : {2, 3, 4, 9, 25}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 20; ++t) {
      const MatSpace v = oracle::random_space(f, 1 + rng.below(4), rng.below(5), rng);
      const std::string text = format_space(v);
      const MatSpace back = parse_space(text);
      EXPECT_EQ(back, v);
      EXPECT_EQ(format_space(back), text);
    }
  }
}

TEST(SpaceFile, ParseErrorsCarryPositions) {
  auto position = [](const std::string& text) -> std::pair<int, int> {
    try {
      parse_space(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  EXPECT_EQ(position("GF(3)\n2 1\n1,0\n0,x\n"), (std::pair<int, int>{4, 3}));
  EXPECT_EQ(position("GF(3)\n2 1\n1,0,0\n0,1\n").first, 3);
  EXPECT_EQ(position("GF(6)\n2 1\n1,0\n0,1\n").first, 1);
  EXPECT_EQ(position("GF(3)\n2\n").first, 2);
  EXPECT_EQ(position("GF(3)\n2 1\n1,0\n").first, 4);
  EXPECT_EQ(position("GF(3)\n2 1\n1,0\n0,1\n1,1\n").first, 5);
  // GF(9): two ascending coordinates per element
  const Field f9 = Field::of_order(9);
  const std::vector<std::uint32_t> x{0, 1};
  EXPECT_EQ(parse_space("GF(9)\n2 1\n1,0,0,1\n0,0,0,0\n").rows()[0][1], f9.from_coords(x));
  EXPECT_EQ(position("GF(9)\n1 1\n1\n").first, 3);
}

}  // namespace
