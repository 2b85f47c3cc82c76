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

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specspace/error.hpp"

namespace specspace {

/// An element of GF(p^k). The coordinate vector (c0, ..., c_{k-1}) in the
/// power basis of the modulus root is stored packed as sum c_i p^i, so the
/// encoding is canonical and equality is integer equality.
struct Fe {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

namespace detail {

enum class FieldKind { Prime, Table, Generic };

struct FieldData {
  std::uint32_t p = 2;
  unsigned k = 1;
  std::uint64_t q = 2;
  std::vector<std::uint32_t> modulus;  // ascending, monic, empty when k == 1
  FieldKind kind = FieldKind::Prime;
  // Table kind only: q*q add/mul tables and per-element neg/inv.
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::vector<std::uint16_t> neg;
  std::vector<std::uint16_t> inv;
};

}  // namespace detail

/// GF(q), q = p^k, with p prime below 2^31 and q below 2^31.
///
/// Cheap to copy (shared immutable state). Two Field values compare equal
/// iff they have the same characteristic and modulus.
class Field {
 public:
  /// GF(p). Throws InvalidField unless p is a prime in [2, 2^31).
  static Field prime(std::uint32_t p);

  /// GF(p)[x]/(modulus); `modulus` lists coefficients in ascending order and
  /// must be monic and irreducible over GF(p).
  static Field extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

  /// GF(q) for a prime q or one of the shipped extension fields
  /// (4, 8, 9, 16, 25, 27).
  static Field of_order(std::uint64_t q);

  /// Parses `GF(p)`, `GF(q)` (built-in), `GF(p^k)` (built-in) or
  /// `GF(p^k; m0,m1,...,mk)`.
  static Field parse(std::string_view literal);

  /// Canonical literal: `GF(p)` or `GF(p^k; m0,...,mk)`.
  std::string literal() const;

  std::uint32_t characteristic() const { return d_->p; }
  unsigned degree() const { return d_->k; }
  std::uint64_t order() const { return d_->q; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  Fe zero() const { return {0}; }
  Fe one() const { return {1}; }
  /// The image of an integer in the prime subfield.
  Fe from_int(std::int64_t value) const;
  /// The element with packed index `index` (< q); iterating 0..q-1 lists the field.
  Fe element(std::uint64_t index) const;
  Fe from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(Fe a) const;

  Fe add(Fe a, Fe b) const {
    const auto& d = *d_;
    switch (d.kind) {
      case detail::FieldKind::Prime: {
        std::uint64_t s = std::uint64_t{a.v} + b.v;
        return {static_cast<std::uint32_t>(s >= d.p ? s - d.p : s)};
      }
      case detail::FieldKind::Table:
        return {d.add[a.v * d.q + b.v]};
      default:
        return add_generic(a, b);
    }
  }

  Fe neg(Fe a) const {
    const auto& d = *d_;
    switch (d.kind) {
      case detail::FieldKind::Prime:
        return {a.v == 0 ? 0u : d.p - a.v};
      case detail::FieldKind::Table:
        return {d.neg[a.v]};
      default:
        return neg_generic(a);
    }
  }

  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

  Fe mul(Fe a, Fe b) const {
    const auto& d = *d_;
    switch (d.kind) {
      case detail::FieldKind::Prime:
        return {static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % d.p)};
      case detail::FieldKind::Table:
        return {d.mul[a.v * d.q + b.v]};
      default:
        return mul_generic(a, b);
    }
  }

  /// Throws DivisionByZero for a == 0.
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, std::uint64_t e) const;
  /// The unique b with b^p == a (b = a^(p^(k-1))).
  Fe pth_root(Fe a) const;

  /// `c0,c1,...,c(k-1)`.
  std::string format(Fe a) const;
  /// Inverse of format(); also accepts a single (possibly negative) integer,
  /// read in the prime subfield.
  Fe parse_element(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

  Fe add_generic(Fe a, Fe b) const;
  Fe neg_generic(Fe a) const;
  Fe mul_generic(Fe a, Fe b) const;

  std::shared_ptr<const detail::FieldData> d_;
};

/// True iff n is prime (deterministic for 32-bit inputs).
bool is_prime(std::uint64_t n);

/// Field element bundled with its field, for checked arithmetic at API
/// boundaries. Hot loops use the raw Field::add/mul interface instead.
struct Element {
  Field field;
  Fe value;

  friend bool operator==(const Element& a, const Element& b) {
    return a.field == b.field && a.value == b.value;
  }
};

enum class FeOp { Add, Sub, Mul, Div };

/// Checked arithmetic: FieldMismatch if the fields differ, DivisionByZero on
/// b == 0 for Div.
Element fe_arith(const Element& a, const Element& b, FeOp op);

inline Element operator+(const Element& a, const Element& b) { return fe_arith(a, b, FeOp::Add); }
inline Element operator-(const Element& a, const Element& b) { return fe_arith(a, b, FeOp::Sub); }
inline Element operator*(const Element& a, const Element& b) { return fe_arith(a, b, FeOp::Mul); }
inline Element operator/(const Element& a, const Element& b) { return fe_arith(a, b, FeOp::Div); }

}  // namespace specspace
