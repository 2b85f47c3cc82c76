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

#include "specspace/gf.hpp"

#include <charconv>
#include <cctype>

#include "specspace/poly.hpp"
#include "text_util.hpp"

namespace specspace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularP: return "SingularP";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::CharMismatch: return "CharMismatch";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::SeedViolatesQuery: return "SeedViolatesQuery";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadDescriptor: return "BadDescriptor";
    case ErrorCode::InvalidField: return "InvalidField";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2u, 3u, 5u, 7u}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
constexpr std::uint64_t kTableLimit = 1024;

struct Builtin {
  std::uint64_t q;
  std::uint32_t p;
  std::vector<std::uint32_t> modulus;
};

// Conway polynomials, ascending coefficients.
const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> table = {
      {4, 2, {1, 1, 1}},     {8, 2, {1, 1, 0, 1}},  {9, 3, {2, 2, 1}},
      {16, 2, {1, 1, 0, 0, 1}}, {25, 5, {2, 4, 1}}, {27, 3, {1, 2, 0, 1}},
  };
  return table;
}

std::vector<std::uint32_t> unpack(std::uint64_t v, std::uint32_t p, unsigned k) {
  std::vector<std::uint32_t> c(k);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return c;
}

std::uint32_t pack(const std::vector<std::uint32_t>& c, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return static_cast<std::uint32_t>(v);
}

std::uint32_t generic_mul(std::uint32_t a, std::uint32_t b, const detail::FieldData& d) {
  const std::uint32_t p = d.p;
  const unsigned k = d.k;
  auto ca = unpack(a, p, k);
  auto cb = unpack(b, p, k);
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p;
    }
  }
  // Reduce by the monic modulus from the top.
  for (std::size_t top = prod.size(); top-- > k;) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    prod[top] = 0;
    for (unsigned j = 0; j < k; ++j) {
      const std::uint64_t sub = c * d.modulus[j] % p;
      std::size_t idx = top - k + j;
      prod[idx] = (prod[idx] + p - sub) % p;
    }
  }
  std::vector<std::uint32_t> out(k);
  for (unsigned i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return pack(out, p);
}

std::uint32_t generic_add(std::uint32_t a, std::uint32_t b, const detail::FieldData& d) {
  auto ca = unpack(a, d.p, d.k);
  auto cb = unpack(b, d.p, d.k);
  for (unsigned i = 0; i < d.k; ++i) ca[i] = static_cast<std::uint32_t>((std::uint64_t{ca[i]} + cb[i]) % d.p);
  return pack(ca, d.p);
}

std::uint32_t generic_neg(std::uint32_t a, const detail::FieldData& d) {
  auto ca = unpack(a, d.p, d.k);
  for (auto& c : ca) c = c == 0 ? 0 : d.p - c;
  return pack(ca, d.p);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= kMaxOrder || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->k = 1;
  d->q = p;
  d->kind = detail::FieldKind::Prime;
  return Field(std::move(d));
}

Field Field::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  Field base = prime(p);
  if (modulus.size() <= 2) {
    if (modulus.size() == 2 && modulus[1] % p == 1) return base;
    throw Error(ErrorCode::InvalidField, "modulus must be monic of degree >= 1");
  }
  for (auto& c : modulus) {
    if (c >= p) throw Error(ErrorCode::InvalidField, "modulus coefficient out of range");
  }
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q >= kMaxOrder) throw Error(ErrorCode::InvalidField, "field order must stay below 2^31");
  }
  std::vector<Fe> coeffs;
  for (auto c : modulus) coeffs.push_back(Fe{c});
  Poly m(base, coeffs);
  if (!m.is_monic()) throw Error(ErrorCode::NonMonic, "field modulus must be monic");
  if (!is_irreducible(m)) throw Error(ErrorCode::InvalidField, "modulus " + m.to_string() + " is reducible");

  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->k = k;
  d->q = q;
  d->modulus = std::move(modulus);
  if (q <= kTableLimit) {
    d->kind = detail::FieldKind::Table;
    d->add.resize(q * q);
    d->mul.resize(q * q);
    d->neg.resize(q);
    d->inv.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      d->neg[a] = static_cast<std::uint16_t>(generic_neg(a, *d));
      for (std::uint32_t b = 0; b < q; ++b) {
        d->add[a * q + b] = static_cast<std::uint16_t>(generic_add(a, b, *d));
        const auto prod = generic_mul(a, b, *d);
        d->mul[a * q + b] = static_cast<std::uint16_t>(prod);
        if (prod == 1) d->inv[a] = static_cast<std::uint16_t>(b);
      }
    }
  } else {
    d->kind = detail::FieldKind::Generic;
  }
  return Field(std::move(d));
}

Field Field::of_order(std::uint64_t q) {
  if (q < kMaxOrder && is_prime(q)) return prime(static_cast<std::uint32_t>(q));
  for (const auto& b : builtins()) {
    if (b.q == q) return extension(b.p, b.modulus);
  }
  throw Error(ErrorCode::InvalidField, "no built-in field of order " + std::to_string(q));
}

Field Field::parse(std::string_view literal) {
  std::string_view s = literal;
  auto fail = [&](const std::string& why, std::size_t pos) -> ParseError {
    return ParseError("bad field literal '" + std::string(literal) + "': " + why, 1,
                      static_cast<int>(pos) + 1);
  };
  std::size_t open = s.find('(');
  std::size_t close = s.rfind(')');
  std::string_view head = text::trim(s.substr(0, open == std::string_view::npos ? 0 : open));
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      (head != "GF" && head != "gf") || !text::trim(s.substr(close + 1)).empty()) {
    throw fail("expected GF(...)", 0);
  }
  std::string_view body = s.substr(open + 1, close - open - 1);
  std::size_t semi = body.find(';');
  std::string_view order_part = text::trim(body.substr(0, semi));
  std::size_t caret = order_part.find('^');
  std::uint64_t base = 0;
  std::uint64_t exp = 1;
  if (!text::parse_u64(text::trim(order_part.substr(0, caret)), base)) throw fail("bad order", open + 1);
  if (caret != std::string_view::npos &&
      !text::parse_u64(text::trim(order_part.substr(caret + 1)), exp)) {
    throw fail("bad exponent", open + 1 + caret + 1);
  }
  if (semi == std::string_view::npos) {
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
      q *= base;
      if (q >= kMaxOrder) throw fail("order too large", open + 1);
    }
    return of_order(q);
  }
  if (!is_prime(base)) throw fail("characteristic is not prime", open + 1);
  std::vector<std::uint32_t> modulus;
  std::size_t offset = open + 1 + semi + 1;
  for (auto piece : text::split(body.substr(semi + 1), ',')) {
    std::int64_t c = 0;
    if (!text::parse_i64(text::trim(piece), c)) throw fail("bad modulus coefficient", offset);
    auto r = static_cast<std::int64_t>(base);
    modulus.push_back(static_cast<std::uint32_t>(((c % r) + r) % r));
    offset += piece.size() + 1;
  }
  if (modulus.size() != exp + 1) throw fail("modulus must have k+1 coefficients", open + 1 + semi);
  return extension(static_cast<std::uint32_t>(base), std::move(modulus));
}

std::string Field::literal() const {
  if (d_->k == 1) return "GF(" + std::to_string(d_->p) + ")";
  std::string out = "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->k) + "; ";
  for (std::size_t i = 0; i < d_->modulus.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d_->modulus[i]);
  }
  return out + ")";
}

Fe Field::from_int(std::int64_t value) const {
  const auto p = static_cast<std::int64_t>(d_->p);
  return Fe{static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Fe Field::element(std::uint64_t index) const {
  if (index >= d_->q) throw Error(ErrorCode::BadParameters, "element index out of range");
  return Fe{static_cast<std::uint32_t>(index)};
}

Fe Field::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() != d_->k) throw Error(ErrorCode::BadParameters, "wrong number of coordinates");
  std::vector<std::uint32_t> c(coords.begin(), coords.end());
  for (auto& x : c) x %= d_->p;
  return Fe{pack(c, d_->p)};
}

std::vector<std::uint32_t> Field::coords(Fe a) const { return unpack(a.v, d_->p, d_->k); }

Fe Field::add_generic(Fe a, Fe b) const { return Fe{generic_add(a.v, b.v, *d_)}; }
Fe Field::neg_generic(Fe a) const { return Fe{generic_neg(a.v, *d_)}; }
Fe Field::mul_generic(Fe a, Fe b) const { return Fe{generic_mul(a.v, b.v, *d_)}; }

Fe Field::inv(Fe a) const {
  if (a.v == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (d_->kind == detail::FieldKind::Table) return Fe{d_->inv[a.v]};
  return pow(a, d_->q - 2);
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  Fe result = one();
  Fe base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Fe Field::pth_root(Fe a) const {
  std::uint64_t e = 1;
  for (unsigned i = 1; i < d_->k; ++i) e *= d_->p;
  return pow(a, e);
}

std::string Field::format(Fe a) const {
  if (d_->k == 1) return std::to_string(a.v);
  auto c = coords(a);
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out;
}

Fe Field::parse_element(std::string_view text) const {
  auto pieces = text::split(text, ',');
  if (pieces.size() == 1) {
    std::int64_t v = 0;
    if (!text::parse_i64(text::trim(pieces[0]), v)) {
      throw ParseError("bad element literal '" + std::string(text) + "'", 1, 1);
    }
    return from_int(v);
  }
  if (pieces.size() != d_->k) {
    throw ParseError("element literal '" + std::string(text) + "' needs " + std::to_string(d_->k) +
                         " coordinates",
                     1, 1);
  }
  std::vector<std::uint32_t> c;
  for (auto piece : pieces) {
    std::int64_t v = 0;
    if (!text::parse_i64(text::trim(piece), v)) {
      throw ParseError("bad coordinate in '" + std::string(text) + "'", 1, 1);
    }
    c.push_back(from_int(v).v);
  }
  return Fe{pack(c, d_->p)};
}

bool operator==(const Field& a, const Field& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->p == b.d_->p && a.d_->k == b.d_->k && a.d_->modulus == b.d_->modulus;
}

Element fe_arith(const Element& a, const Element& b, FeOp op) {
  if (!(a.field == b.field)) throw Error(ErrorCode::FieldMismatch, a.field.literal() + " vs " + b.field.literal());
  const Field& f = a.field;
  switch (op) {
    case FeOp::Add: return {f, f.add(a.value, b.value)};
    case FeOp::Sub: return {f, f.sub(a.value, b.value)};
    case FeOp::Mul: return {f, f.mul(a.value, b.value)};
    case FeOp::Div: return {f, f.div(a.value, b.value)};
  }
  return a;
}

}  // namespace specspace
