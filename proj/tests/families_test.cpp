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

#include "oracles.hpp"
#include "specspace/enumerate.hpp"
#include "specspace/families.hpp"

namespace {

using namespace specspace;
using FD = FamilyDescriptor;
using oracle::binom2;

const SpectrumQuery kOneBar{1, Location::Closure, false};
const SpectrumQuery kOneBarStar{1, Location::Closure, true};
const SpectrumQuery kTwoBar{2, Location::Closure, false};

std::vector<std::vector<std::size_t>> subsets(std::size_t n, bool proper) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (proper && mask == (1u << n) - 1) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

std::vector<FD> exceptional_blocks(const Field& f) {
  std::vector<FD> out;
  for (std::uint64_t d = 0; d < f.order(); ++d) {
    out.push_back(FD::fdelta(static_cast<std::int64_t>(d)));
    out.push_back(FD::gdelta(static_cast<std::int64_t>(d)));
  }
  return out;
}

Mat block_diag(const Mat& a, const Mat& b) {
  const std::size_t n = a.n() + b.n();
  Mat m(a.field(), n);
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) m.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j) m.set(a.n() + i, a.n() + j, b.at(i, j));
  return m;
}

MatSpace scalars_plus_nt(const Field& f, std::size_t n) { return with_scalars(build(FD::nt(n), f)); }

TEST(Families, DimensionTable) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field f = Field::of_order(q);
    for (std::size_t n = 2; n <= 8; ++n) {
      for (const auto& I : subsets(n, false)) ASSERT_EQ(build(FD::v1star(n, I), f).dim(), binom2(n) + 1);
      for (const auto& I : subsets(n, true)) ASSERT_EQ(build(FD::v2(n, I), f).dim(), binom2(n) + 2);
      if (f.characteristic() == 3 && n >= 3) {
        for (std::size_t p = 0; p + 3 <= n; ++p)
          for (const auto& F : exceptional_blocks(f)) {
            ASSERT_EQ(build(FD::w1star(n, p, F), f).dim(), binom2(n) + 1);
            if (n >= 4) {
              ASSERT_EQ(build(FD::w2(n, p, F), f).dim(), binom2(n) + 2);
            }
          }
      }
      EXPECT_EQ(build(FD::nt(n), f).dim(), binom2(n));
      EXPECT_EQ(build(FD::sl(n), f).dim(), n * n - 1);
    }
    EXPECT_EQ(build(FD::g4(), f).dim(), 8u);
    EXPECT_EQ(build(FD::g4prime(), f).dim(), 8u);
    if (f.characteristic() == 2) {
      EXPECT_EQ(build(FD::hchar2(), f).dim(), 7u);
    }
  }
  const Field f3 = Field::of_order(3);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(build(FD::loewy_radwan(n, k), f3).dim(), binom2(n) + binom2(k) + 1);
}

TEST(Families, VeeDimension) {
  Rng rng(41);
  const Field f = Field::of_order(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t na = 1 + rng.below(3), nb = 1 + rng.below(3);
    const MatSpace a = oracle::random_space(f, na, rng.below(4), rng);
    const MatSpace b = oracle::random_space(f, nb, rng.below(4), rng);
    const MatSpace v = vee(a, b);
    EXPECT_EQ(v.n(), na + nb);
    EXPECT_EQ(v.dim(), a.dim() + b.dim() + na * nb);
  }
}

TEST(Families, BasicShapes) {
  const Field f5 = Field::of_order(5);
  const MatSpace di = build(FD::di(3, {1, 3}), f5);
  ASSERT_EQ(di.dim(), 1u);
  EXPECT_EQ(di.basis(0), Mat::from_ints(f5, 3, {1, 0, 0, 0, 0, 0, 0, 0, 1}));
  const MatSpace sl = build(FD::sl(3), f5);
  for (const auto& m : sl.basis_matrices()) EXPECT_EQ(m.trace(), Fe{});
  const MatSpace g4 = build(FD::g4(), f5), g4p = build(FD::g4prime(), f5);
  const Mat a = Mat::from_ints(f5, 4, {1, 2, 0, 0, 3, 4, 0, 0, 0, 0, 1, 2, 0, 0, 3, 4});
  const Mat at = Mat::from_ints(f5, 4, {1, 2, 0, 0, 3, 4, 0, 0, 0, 0, 1, 3, 0, 0, 2, 4});
  EXPECT_TRUE(g4.contains(a));
  EXPECT_FALSE(g4.contains(at));
  EXPECT_TRUE(g4p.contains(at));
  EXPECT_FALSE(g4p.contains(a));
  EXPECT_EQ(with_scalars(build(FD::v1star(3, {2}), f5)), build(FD::v2(3, {2}), f5));
  EXPECT_EQ(build(FD::vee(FD::nt(2), FD::nt(3)), f5), build(FD::nt(5), f5));
}

TEST(Families, SpecConformance) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field f = Field::of_order(q);
    for (std::size_t n = 2; n <= 4; ++n) {
      if (oracle::ipow(q, binom2(n) + 2) > 1'000'000) continue;
      for (const auto& I : subsets(n, false)) {
        const auto r = check_spec(build(FD::v1star(n, I), f), kOneBarStar, CheckMode::exhaustive());
        ASSERT_TRUE(r.holds);
        ASSERT_EQ(r.members_total, oracle::ipow(q, binom2(n) + 1));
      }
      for (const auto& I : subsets(n, true))
        ASSERT_TRUE(check_spec(build(FD::v2(n, I), f), kTwoBar, CheckMode::exhaustive()).holds);
    }
  }
  for (std::uint64_t q : {3, 9}) {
    const Field f = Field::of_order(q);
    for (const auto& F : exceptional_blocks(f)) {
      const auto r = check_spec(build(F, f), kOneBar, CheckMode::exhaustive());
      EXPECT_TRUE(r.holds) << F.to_string();
      EXPECT_EQ(r.members_total, q * q * q * q);
    }
  }
  for (std::uint64_t q : {2, 4}) {
    const Field f = Field::of_order(q);
    EXPECT_TRUE(check_spec(build(FD::hchar2(), f), kOneBar, CheckMode::exhaustive()).holds);
    for (std::size_t n = 3; n <= 4; ++n) {
      const MatSpace v = vee(build(FD::sl(2), f), scalars_plus_nt(f, n - 2));
      EXPECT_EQ(v.dim(), binom2(n) + 3);
      EXPECT_TRUE(check_spec(v, kTwoBar, CheckMode::exhaustive()).holds);
    }
  }
  const Field f2 = Field::of_order(2);
  const MatSpace sl2sl2 = build(FD::vee(FD::sl(2), FD::sl(2)), f2);
  EXPECT_EQ(sl2sl2.dim(), binom2(4) + 4);
  EXPECT_TRUE(check_spec(sl2sl2, kTwoBar, CheckMode::exhaustive()).holds);
}

TEST(Families, SpecConformanceAgreesWithOracle) {
  for (std::uint64_t q : {2, 3}) {
    const Field f = Field::of_order(q);
    for (const auto& I : subsets(3, true)) {
      EXPECT_TRUE(oracle::spec_holds(build(FD::v2(3, I), f), kTwoBar));
      EXPECT_TRUE(oracle::spec_holds(build(FD::v1star(3, I), f), kOneBarStar));
      // over GF(2) the only nonzero eigenvalue available is 1
      EXPECT_EQ(oracle::spec_holds(build(FD::v2(3, I), f), kOneBarStar), q == 2);
    }
    for (std::size_t n = 2; n <= 3; ++n)
      for (std::size_t k = 1; k <= n; ++k) {
        const MatSpace lr = build(FD::loewy_radwan(n, k), f);
        EXPECT_TRUE(oracle::spec_holds(lr, {static_cast<unsigned>(k), Location::Closure, false}));
        EXPECT_EQ(check_spec(lr, {static_cast<unsigned>(k), Location::Closure, false}, CheckMode::exhaustive()).holds, true);
      }
  }
  const Field f3 = Field::of_order(3);
  for (const auto& F : exceptional_blocks(f3)) {
    EXPECT_TRUE(oracle::spec_holds(build(F, f3), kOneBar));
    EXPECT_FALSE(oracle::spec_holds(build(F, f3), {0, Location::Closure, true}));
  }
  EXPECT_TRUE(oracle::spec_holds(build(FD::hchar2(), Field::of_order(2)), kOneBar));
}

TEST(Families, VeeCommutesWithBlockConjugation) {
  Rng rng(42);
  const Field f = Field::of_order(3);
  for (int t = 0; t < 100; ++t) {
    const MatSpace a = oracle::random_space(f, 2, 1 + rng.below(3), rng);
    const MatSpace b = oracle::random_space(f, 2, 1 + rng.below(3), rng);
    const Mat p = oracle::random_invertible(f, 2, rng), q = oracle::random_invertible(f, 2, rng);
    ASSERT_EQ(conjugate(vee(a, b), block_diag(p, q)), vee(conjugate(a, p), conjugate(b, q)));
  }
}

TEST(Families, ExceptionalSpacesAreSpannedBySingularMembers) {
  for (std::uint64_t q : {3, 9}) {
    const Field f = Field::of_order(q);
    for (const auto& F : exceptional_blocks(f)) {
      const MatSpace v = build(F, f);
      std::vector<Vec> singular;
      oracle::for_each_combination(v, [&](const Mat& m) {
        if (oracle::cofactor_charpoly(m).coeff(0) == Fe{}) singular.emplace_back(m.entries().begin(), m.entries().end());
      });
      EXPECT_EQ(oracle::span_dim(f, singular), 4u) << F.to_string();
    }
  }
}

TEST(Families, NoNilpotentHyperplaneInExceptionalSpaces) {
  const Field f = Field::of_order(3);
  for (const auto& F : exceptional_blocks(f)) {
    const MatSpace v = build(F, f);
    std::size_t hyperplanes = 0;
    for (std::uint64_t r = 0; r < projective_count(3, 4); ++r) {
      const Vec form = projective_point(f, 4, r);
      ++hyperplanes;
      bool found = false;
      oracle::for_each_combination(v, [&](const Mat& m) {
        if (found) return;
        const auto c = v.coordinates(m);
        Fe dot{};
        for (std::size_t i = 0; i < 4; ++i) dot = f.add(dot, f.mul(form[i], (*c)[i]));
        if (dot != Fe{}) return;
        if (oracle::cofactor_charpoly(m) != Poly::monomial(f, f.one(), 3)) found = true;
      });
      EXPECT_TRUE(found) << F.to_string() << " hyperplane " << r;
    }
    EXPECT_EQ(hyperplanes, 40u);
  }
}

TEST(Families, ExceptionalPredicates) {
  for (std::uint64_t q : {3, 9}) {
    const Field f = Field::of_order(q);
    for (const auto& F : exceptional_blocks(f)) {
      const MatSpace v = build(F, f);
      EXPECT_TRUE(is_exceptional(v)) << F.to_string();
      EXPECT_TRUE(reduced_form(v, ReducedLevel::Fully));
      EXPECT_TRUE(reduced_form(v, ReducedLevel::Well));
      EXPECT_TRUE(reduced_form(v, ReducedLevel::Semi));
    }
    const MatSpace ki_nt = scalars_plus_nt(f, 3);
    EXPECT_FALSE(is_exceptional(ki_nt));
    EXPECT_FALSE(reduced_form(ki_nt, ReducedLevel::Semi));
    EXPECT_FALSE(is_exceptional(build(FD::nt(3), f)));
    EXPECT_EQ(image_dim(ki_nt, Vec{f.one(), f.zero(), f.zero()}), 1u);
  }
}

TEST(Families, ExceptionalityIsConjugationInvariant) {
  Rng rng(43);
  const Field f = Field::of_order(3);
  const std::vector<MatSpace> pool{build(FD::fdelta(0), f), build(FD::gdelta(2), f), scalars_plus_nt(f, 3),
                                   build(FD::v1star(3, {1, 3}), f)};
  for (const auto& v : pool)
    for (int t = 0; t < 20; ++t) {
      const MatSpace w = conjugate(v, oracle::random_invertible(f, 3, rng));
      EXPECT_EQ(is_exceptional(w), is_exceptional(v));
      if (reduced_form(w, ReducedLevel::Fully)) {
        EXPECT_TRUE(reduced_form(w, ReducedLevel::Well));
      }
      if (reduced_form(w, ReducedLevel::Well)) {
        EXPECT_TRUE(reduced_form(w, ReducedLevel::Semi));
      }
    }
}

TEST(Families, DomainErrors) {
  auto code_of = [](auto&& fn) -> std::optional<ErrorCode> {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return std::nullopt;
  };
  const Field f3 = Field::of_order(3), f5 = Field::of_order(5), f4 = Field::of_order(4);
  EXPECT_EQ(code_of([&] { build(FD::v2(3, {1, 2, 3}), f3); }), ErrorCode::BadParameters);
  EXPECT_EQ(code_of([&] { build(FD::v1star(3, {}), f3); }), ErrorCode::BadParameters);
  EXPECT_EQ(code_of([&] { build(FD::v1star(3, {4}), f3); }), ErrorCode::BadParameters);
  EXPECT_EQ(code_of([&] { build(FD::w1star(4, 2, FD::fdelta(0)), f3); }), ErrorCode::BadParameters);
  EXPECT_EQ(code_of([&] { build(FD::hchar2(), f3); }), ErrorCode::CharMismatch);
  EXPECT_EQ(code_of([&] { build(FD::fdelta(1), f5); }), ErrorCode::CharMismatch);
  EXPECT_EQ(code_of([&] { build(FD::fdelta(3), f3); }), ErrorCode::BadParameters);
  EXPECT_EQ(code_of([&] { is_exceptional(build(FD::nt(3), f5)); }), ErrorCode::CharMismatch);
  EXPECT_EQ(code_of([&] { is_exceptional(build(FD::nt(4), f3)); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([&] { vee(build(FD::nt(2), f3), build(FD::nt(2), f4)); }), ErrorCode::FieldMismatch);
}

TEST(FamilyDescriptor, ParseAndPrint) {
  const Field f3 = Field::of_order(3);
  for (const char* text : {"v1star:n=5,I=1,3", "v2:n=4,I=2", "nt:n=3", "sl:n=2", "di:n=3,I=2", "g4", "g4p", "h4",
                           "fdelta:d=1", "gdelta:d=0", "vee:(fdelta:d=1)|(gdelta:d=0)", "w2:n=6,p=1,F=fdelta:d=2",
                           "w1star:n=4,p=0,F=gdelta:d=1", "lr:n=5,k=3"}) {
    const FD d = FD::parse(text);
    EXPECT_EQ(d.to_string(), text);
    EXPECT_EQ(FD::parse(d.to_string()).to_string(), text);
  }
  EXPECT_EQ(FD::parse("vee:(fdelta:d=1)|(gdelta:d=0)").size(), 6u);
  EXPECT_EQ(build(FD::parse("w2:n=6,p=1,F=fdelta:d=2"), f3), build(FD::w2(6, 1, FD::fdelta(2)), f3));
  EXPECT_EQ(to_string(FamilyTag::LoewyRadwan), "LoewyRadwan");
  for (const char* bad : {"", "v2", "v2:n=3,I=1,2,3", "v1star:n=3", "nt:n=3,I=1", "xyz:n=2", "vee:(nt:n=2)",
                          "vee:(nt:n=2)|nt:n=2", "w2:n=2,p=0,F=fdelta:d=0", "lr:n=3,k=4", "nt:n=abc"}) {
    EXPECT_THROW(FD::parse(bad), Error) << bad;
  }
}

}  // namespace
