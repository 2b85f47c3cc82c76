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
#include <initializer_list>
#include <string>
#include <vector>

#include "specspace/gf.hpp"

namespace specspace {

/// Dense univariate polynomial over a finite field, coefficients ascending.
/// Canonical: no trailing zero coefficients; the zero polynomial is empty.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Fe> coeffs);

  /// Ascending integer coefficients, reduced into the prime subfield.
  static Poly from_ints(const Field& field, std::initializer_list<std::int64_t> coeffs);
  static Poly monomial(const Field& field, Fe c, unsigned degree);
  static Poly constant(const Field& field, Fe c) { return monomial(field, c, 0); }

  const Field& field() const { return field_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fe{}; }
  Fe leading() const { return c_.empty() ? Fe{} : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

  Fe eval(Fe t) const;
  Poly derivative() const;
  /// Divides by the leading coefficient; the zero polynomial stays zero.
  Poly monic() const;

  /// Human-readable form, e.g. `t^3 + 2*t + 1`.
  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();

  Field field_;
  std::vector<Fe> c_;
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; DivisionByZero for a zero divisor.
PolyDivMod divmod(const Poly& a, const Poly& b);
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& f, const Poly& g);

/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// The monic radical of f: squarefree, with the same roots in the algebraic
/// closure. Handles inseparable factors in characteristic p by p-th-root
/// descent. ZeroPolynomial for f == 0.
Poly squarefree_part(const Poly& f);

/// Number of distinct roots of f lying in its coefficient field GF(q),
/// computed as deg gcd(f, t^q - t). ZeroPolynomial for f == 0.
std::size_t count_roots_in_field(const Poly& f);

/// Number of distinct roots of f in the algebraic closure of its field.
std::size_t count_roots_in_closure(const Poly& f);

/// Rabin irreducibility test over the coefficient field. NonMonic unless f is
/// monic; constants are reported reducible.
bool is_irreducible(const Poly& f);

}  // namespace specspace
