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
#include "specspace/poly.hpp"

namespace {

using namespace specspace;

Poly P(const Field& f, std::initializer_list<std::int64_t> c) { return Poly::from_ints(f, c); }

TEST(Poly, IrreducibilityExamples) {
  EXPECT_TRUE(is_irreducible(P(Field::of_order(3), {1, 0, 1})));
  EXPECT_FALSE(is_irreducible(P(Field::of_order(5), {1, 0, 1})));
  EXPECT_TRUE(is_irreducible(P(Field::of_order(2), {-1, 1})));
  EXPECT_THROW(is_irreducible(P(Field::of_order(3), {1, 0, 2})), Error);
}

TEST(Poly, GcdExamples) {
  const Field f5 = Field::of_order(5);
  EXPECT_EQ(poly_gcd(P(f5, {0, 0, 1}), P(f5, {0, 0, 0, 1})), P(f5, {0, 0, 1}));
  EXPECT_EQ(poly_gcd(P(f5, {0, 1, 1}), P(f5, {0, 0, 0, 1})), P(f5, {0, 1}));
  EXPECT_EQ(poly_gcd(P(f5, {-1, 0, 1}), P(f5, {-1, 1})), P(f5, {-1, 1}));
  EXPECT_EQ(poly_gcd(P(f5, {2, 4}), Poly(f5)), P(f5, {3, 1}));
}

TEST(Poly, SquarefreeExamples) {
  const Field f3 = Field::of_order(3);
  EXPECT_EQ(squarefree_part(P(f3, {0, 0, 1, 0, 1})), P(f3, {0, 1, 0, 1}));
  EXPECT_EQ(squarefree_part(P(f3, {-1, 0, 0, 1})), P(f3, {-1, 1}));
  EXPECT_EQ(squarefree_part(P(f3, {1, 0, 1})), P(f3, {1, 0, 1}));
  EXPECT_THROW(squarefree_part(Poly(f3)), Error);
}

TEST(Poly, RootCountExamples) {
  EXPECT_EQ(count_roots_in_field(P(Field::of_order(3), {1, 0, 1})), 0u);
  EXPECT_EQ(count_roots_in_field(P(Field::of_order(5), {0, -1, 0, 1})), 3u);
  const Field f7 = Field::of_order(7);
  Poly p = P(f7, {1});
  for (int i = 0; i < 5; ++i) {
    p = p * P(f7, {-1, 1});
    EXPECT_EQ(count_roots_in_field(p), 1u);
    EXPECT_EQ(count_roots_in_closure(p), 1u);
  }
}

TEST(Poly, DivisionIdentity) {
  Rng rng(3);
  for (std::uint64_t q : {2, 3, 4, 9}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 300; ++t) {
      std::vector<Fe> a(1 + rng.below(8)), b(1 + rng.below(5));
      for (auto& e : a) e = f.element(rng.below(q));
      for (auto& e : b) e = f.element(rng.below(q));
      const Poly pa(f, a), pb(f, b);
      if (pb.is_zero()) {
        EXPECT_THROW(divmod(pa, pb), Error);
        continue;
      }
      const auto [quot, rem] = divmod(pa, pb);
      EXPECT_EQ(quot * pb + rem, pa);
      EXPECT_LT(rem.degree(), pb.degree());
    }
  }
}

/// Visits every polynomial of degree 1..max_deg (exhaustively for tiny q,
/// otherwise a fixed random sample).
template <class Fn>
void for_polys(const Field& f, unsigned max_deg, std::size_t sample, Fn fn) {
  Rng rng(f.order() * 131 + max_deg);
  const std::uint64_t q = f.order();
  for (unsigned d = 1; d <= max_deg; ++d) {
    const std::uint64_t total = oracle::ipow(q, d) * (q - 1);
    const bool all = total <= sample;
    const std::uint64_t count = all ? total : sample;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t r = all ? i : rng.below(total);
      std::vector<Fe> c(d + 1);
      for (unsigned j = 0; j < d; ++j) {
        c[j] = f.element(r % q);
        r /= q;
      }
      c[d] = f.element(1 + r);
      fn(Poly(f, c));
    }
  }
}

TEST(PolyProperty, FieldRootCountMatchesEvaluation) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field f = Field::of_order(q);
    for_polys(f, 6, 3000, [&](const Poly& p) {
      ASSERT_EQ(count_roots_in_field(p), oracle::roots_by_evaluation(p)) << p.to_string() << " over " << f.literal();
    });
  }
}

TEST(PolyProperty, ClosureRootCountMatchesFactoring) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field f = Field::of_order(q);
    for_polys(f, 5, 400, [&](const Poly& p) {
      ASSERT_EQ(count_roots_in_closure(p), oracle::closure_roots_by_factoring(p)) << p.to_string() << " over " << f.literal();
    });
  }
}

TEST(PolyProperty, SquarefreePartDividesAndIsSeparableInExtensions) {
  // (prime field, an extension GF(p^m) with m <= 3 containing it)
  const std::pair<std::uint32_t, Field> cases[] = {
      {2, Field::of_order(8)}, {3, Field::of_order(27)}, {5, Field::of_order(25)}, {7, Field::extension(7, {1, 0, 1})}};
  for (const auto& [p, ext] : cases) {
    const Field f = Field::prime(p);
    for_polys(f, 6, 500, [&](const Poly& poly) {
      const Poly s = squarefree_part(poly);
      ASSERT_LE(s.degree(), poly.degree());
      ASSERT_TRUE((poly % s).is_zero()) << poly.to_string();
      // Lift into the extension (prime-field elements keep their index).
      auto lift = [&](const Poly& x) {
        std::vector<Fe> c;
        for (auto e : x.coeffs()) c.push_back(ext.element(e.v));
        return Poly(ext, c);
      };
      const Poly big = lift(poly), bs = lift(s), bsd = bs.derivative();
      for (std::uint64_t i = 0; i < ext.order(); ++i) {
        const Fe r = ext.element(i);
        if (big.eval(r) != Fe{}) continue;
        ASSERT_EQ(bs.eval(r), Fe{}) << poly.to_string();
        ASSERT_NE(bsd.eval(r), Fe{}) << "repeated root of the squarefree part of " << poly.to_string();
      }
    });
  }
}

TEST(PolyProperty, SquarefreeDegreeDropsOnlyWithRepeatedFactors) {
  for (std::uint64_t q : {2, 3, 5, 9}) {
    const Field f = Field::of_order(q);
    for_polys(f, 5, 400, [&](const Poly& p) {
      const Poly d = p.derivative();
      const bool separable = !d.is_zero() && poly_gcd(p, d).degree() == 0;
      ASSERT_EQ(squarefree_part(p).degree() == p.degree(), separable) << p.to_string();
    });
  }
}

TEST(PolyProperty, IrreducibilityMatchesTrialDivision) {
  for (std::uint64_t q : {2, 3, 4}) {
    const Field f = Field::of_order(q);
    for (unsigned d = 1; d <= 4; ++d) {
      const auto& irr = oracle::irreducibles(f, d);
      for (const auto& c : oracle::monic_polys(f, d)) {
        const bool expected = std::find(irr.begin(), irr.end(), c) != irr.end();
        ASSERT_EQ(is_irreducible(Poly(f, c)), expected) << Poly(f, c).to_string();
      }
    }
  }
}

}  // namespace
