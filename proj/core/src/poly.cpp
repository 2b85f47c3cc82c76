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

#include "specspace/poly.hpp"

#include <algorithm>

namespace specspace {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::FieldMismatch, a.field().literal() + " vs " + b.field().literal());
  }
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Poly::Poly(Field field, std::vector<Fe> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (c.v >= field_.order()) throw Error(ErrorCode::BadParameters, "coefficient outside field");
  }
  trim();
}

Poly Poly::from_ints(const Field& field, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Fe> c;
  for (auto v : coeffs) c.push_back(field.from_int(v));
  return Poly(field, std::move(c));
}

Poly Poly::monomial(const Field& field, Fe c, unsigned degree) {
  std::vector<Fe> coeffs(degree + 1, field.zero());
  coeffs[degree] = c;
  return Poly(field, std::move(coeffs));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == Fe{}) c_.pop_back();
}

Fe Poly::eval(Fe t) const {
  Fe acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, t), c_[i]);
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Fe> d;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d.push_back(field_.mul(field_.from_int(static_cast<std::int64_t>(i)), c_[i]));
  }
  return Poly(field_, std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  const Fe inv = field_.inv(c_.back());
  std::vector<Fe> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_.mul(c_[i], inv);
  return Poly(field_, std::move(out));
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == Fe{}) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c_[i] == field_.one();
    std::string coeff = field_.degree() == 1 ? field_.format(c_[i]) : "(" + field_.format(c_[i]) + ")";
    if (i == 0) {
      out += coeff;
    } else {
      if (!unit) out += coeff + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field_;
  std::vector<Fe> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field_;
  std::vector<Fe> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field_;
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Fe> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == Fe{}) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
    }
  }
  return Poly(f, std::move(out));
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  const Field& f = a.field();
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Fe> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Fe lead_inv = f.inv(bc.back());
  std::vector<Fe> quot(rem.size() - db);
  for (std::size_t top = rem.size(); top-- > db;) {
    const Fe c = f.mul(rem[top], lead_inv);
    quot[top - db] = c;
    if (c == Fe{}) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[top - db + j] = f.sub(rem[top - db + j], f.mul(c, bc[j]));
    }
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  require_same_field(f, g);
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  require_same_field(base, m);
  Poly result = Poly::constant(m.field(), m.field().one()) % m;
  Poly b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero");
  const Field& field = f.field();
  Poly g = f.monic();
  if (g.degree() <= 0) return g;
  Poly d = g.derivative();
  if (d.is_zero()) {
    // g(t) = h(t^p) = (h^(1/p))(t)^p: same roots as the p-th root polynomial.
    const std::uint32_t p = field.characteristic();
    std::vector<Fe> root;
    for (std::size_t i = 0; i < g.coeffs().size(); i += p) root.push_back(field.pth_root(g.coeffs()[i]));
    return squarefree_part(Poly(field, std::move(root)));
  }
  // w collects the irreducible factors whose multiplicity is prime to p;
  // the rest survive in gcd(g, g') and are handled recursively.
  Poly common = poly_gcd(g, d);
  Poly w = (g / common).monic();
  if (common.degree() == 0) return w;
  Poly rest = squarefree_part(common);
  Poly overlap = poly_gcd(w, rest);
  return ((w * rest) / overlap).monic();
}

std::size_t count_roots_in_field(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of zero");
  if (f.degree() <= 0) return 0;
  const Field& field = f.field();
  Poly g = f.monic();
  Poly t = Poly::monomial(field, field.one(), 1);
  Poly tq = powmod(t, field.order(), g);
  return static_cast<std::size_t>(poly_gcd(g, tq - t).degree());
}

std::size_t count_roots_in_closure(const Poly& f) {
  return static_cast<std::size_t>(squarefree_part(f).degree());
}

bool is_irreducible(const Poly& f) {
  if (!f.is_monic()) throw Error(ErrorCode::NonMonic, "irreducibility test needs a monic polynomial");
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Field& field = f.field();
  const std::uint64_t q = field.order();
  const Poly t = Poly::monomial(field, field.one(), 1);
  // frob[i] = t^(q^i) mod f
  std::vector<Poly> frob{t % f};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), q, f));
  if (!((frob[n] - t) % f).is_zero()) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    Poly g = poly_gcd(f, frob[n / r] - t);
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace specspace
