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
#include "specspace/gf.hpp"

namespace {

using namespace specspace;

std::vector<Field> small_fields() {
  std::vector<Field> out;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27}) out.push_back(Field::of_order(q));
  out.push_back(Field::extension(7, {1, 0, 1}));  // GF(49), t^2 + 1
  return out;
}

TEST(Field, ExamplesFromArithmetic) {
  const Field f3 = Field::of_order(3);
  EXPECT_EQ(f3.add(f3.from_int(2), f3.from_int(2)), f3.from_int(1));
  const Field f4 = Field::of_order(4);
  const std::uint32_t x[] = {0, 1};
  const std::uint32_t x_plus_1[] = {1, 1};
  EXPECT_EQ(f4.mul(f4.from_coords(x), f4.from_coords(x)), f4.from_coords(x_plus_1));
  const Field f5 = Field::of_order(5);
  EXPECT_EQ(f5.inv(f5.from_int(2)), f5.from_int(3));
  EXPECT_THROW(f5.inv(f5.zero()), Error);
}

TEST(Field, LawsHoldExhaustivelyOnSmallFields) {
  for (const Field& f : small_fields()) {
    const std::uint64_t q = f.order();
    for (std::uint64_t i = 0; i < q; ++i) {
      const Fe a = f.element(i);
      EXPECT_EQ(f.pow(a, q), a) << f.literal();
      if (a != Fe{}) {
        EXPECT_EQ(f.mul(a, f.inv(a)), f.one()) << f.literal();
      }
      EXPECT_EQ(f.add(a, f.neg(a)), f.zero());
      for (std::uint64_t j = 0; j < q; ++j) {
        const Fe b = f.element(j);
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        if (q > 27) continue;  // the cubic loop below stays exhaustive up to q = 27
        for (std::uint64_t k = 0; k < q; ++k) {
          const Fe c = f.element(k);
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c))) << f.literal();
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))) << f.literal();
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))) << f.literal();
        }
      }
    }
  }
}

TEST(Field, LawsOnRandomSamplesInALargeGenericField) {
  const Field f = Field::extension(2, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1});  // t^11 + t^2 + 1
  ASSERT_EQ(f.order(), 2048u);
  Rng rng(7);
  for (int t = 0; t < 2000; ++t) {
    const Fe a = f.element(rng.below(2048)), b = f.element(rng.below(2048)), c = f.element(rng.below(2048));
    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    ASSERT_EQ(f.pow(a, 2048), a);
    if (a != Fe{}) {
      ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
    }
  }
}

TEST(Field, MultiplicationMatchesPolynomialReductionOracle) {
  // Multiply coefficient vectors as polynomials and reduce by the modulus.
  for (const Field& f : small_fields()) {
    if (f.degree() == 1) continue;
    const std::uint32_t p = f.characteristic();
    const auto& mod = f.modulus();
    const unsigned k = f.degree();
    for (std::uint64_t i = 0; i < f.order(); ++i)
      for (std::uint64_t j = 0; j < f.order(); ++j) {
        const auto a = f.coords(f.element(i)), b = f.coords(f.element(j));
        std::vector<std::uint64_t> prod(2 * k - 1, 0);
        for (unsigned x = 0; x < k; ++x)
          for (unsigned y = 0; y < k; ++y) prod[x + y] = (prod[x + y] + a[x] * b[y]) % p;
        for (std::size_t top = prod.size(); top-- > k;) {
          const std::uint64_t c = prod[top];
          for (unsigned t = 0; t <= k; ++t) prod[top - k + t] = (prod[top - k + t] + (p - c) * mod[t]) % p;
        }
        std::vector<std::uint32_t> want(prod.begin(), prod.begin() + k);
        ASSERT_EQ(f.coords(f.mul(f.element(i), f.element(j))), want) << f.literal();
      }
  }
}

TEST(Field, FrobeniusRootInvertsPowerP) {
  for (const Field& f : small_fields())
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      const Fe a = f.element(i);
      EXPECT_EQ(f.pow(f.pth_root(a), f.characteristic()), a);
    }
}

TEST(Field, LiteralsRoundTrip) {
  EXPECT_EQ(Field::parse("GF(2^3; 1,1,0,1)"), Field::of_order(8));
  EXPECT_EQ(Field::parse("GF(9)"), Field::of_order(9));
  EXPECT_EQ(Field::parse("GF(3^2)"), Field::of_order(9));
  for (const Field& f : small_fields()) {
    EXPECT_EQ(Field::parse(f.literal()), f);
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      const Fe a = f.element(i);
      EXPECT_EQ(f.parse_element(f.format(a)), a);
      EXPECT_EQ(f.from_coords(f.coords(a)), a);
    }
  }
}

TEST(Field, RejectsInvalidDefinitions) {
  EXPECT_THROW(Field::of_order(6), Error);
  EXPECT_THROW(Field::prime(1), Error);
  EXPECT_THROW(Field::parse("GF(2^2; 1,0,1)"), Error);  // t^2 + 1 = (t + 1)^2
  EXPECT_THROW(Field::parse("GF(3"), Error);
  try {
    Field::of_order(6);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidField);
  }
}

TEST(Field, ElementWrapperChecksFields) {
  const Field f3 = Field::of_order(3), f5 = Field::of_order(5);
  const Element a{f3, f3.from_int(2)}, b{f3, f3.from_int(2)};
  EXPECT_EQ((a * b).value, f3.one());
  EXPECT_THROW((a + Element{f5, f5.one()}), Error);
}

TEST(Field, ConwayModuliAreIrreducible) {
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27}) {
    const Field f = Field::of_order(q);
    const Field base = Field::prime(f.characteristic());
    std::vector<Fe> c;
    for (auto m : f.modulus()) c.push_back(base.element(m));
    bool found = false;
    for (const auto& irr : oracle::irreducibles(base, f.degree())) found = found || irr == c;
    EXPECT_TRUE(found) << q;
  }
}

}  // namespace
