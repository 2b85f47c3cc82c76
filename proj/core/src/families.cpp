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

#include "specspace/families.hpp"

#include <algorithm>
#include <optional>

#include "specspace/enumerate.hpp"
#include "text_util.hpp"

namespace specspace {

namespace {

using Entry = std::pair<std::size_t, std::size_t>;

Vec unit_vec(std::size_t n, std::size_t i, std::size_t j, const Field& f) {
  Vec v(n * n);
  v[i * n + j] = f.one();
  return v;
}

// Sum of unit matrices at the given 0-based positions.
Vec units(std::size_t n, std::initializer_list<Entry> entries, const Field& f) {
  Vec v(n * n);
  for (auto [i, j] : entries) v[i * n + j] = f.add(v[i * n + j], f.one());
  return v;
}

void add_nt(std::vector<Vec>& rows, std::size_t n, const Field& f) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rows.push_back(unit_vec(n, i, j, f));
}

Vec identity_vec(std::size_t n, const Field& f) {
  Vec v(n * n);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = f.one();
  return v;
}

Vec d_vec(std::size_t n, const std::vector<std::size_t>& I, const Field& f) {
  Vec v(n * n);
  for (auto i : I) v[(i - 1) * n + (i - 1)] = f.one();
  return v;
}

Fe delta_of(std::int64_t delta, const Field& f) {
  if (delta < 0) return f.from_int(delta);
  if (static_cast<std::uint64_t>(delta) >= f.order()) {
    throw Error(ErrorCode::BadParameters, "delta index " + std::to_string(delta) + " outside " + f.literal());
  }
  return f.element(static_cast<std::uint64_t>(delta));
}

std::optional<std::string> domain_error(const FamilyDescriptor& d) {
  auto check_index_set = [&](bool nonempty, bool proper) -> std::optional<std::string> {
    std::vector<std::size_t> s = d.I;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return "I has repeated indices";
    for (auto i : s) {
      if (i < 1 || i > d.n) return "index " + std::to_string(i) + " outside 1.." + std::to_string(d.n);
    }
    if (nonempty && s.empty()) return "I must be non-empty";
    if (proper && s.size() == d.n) return "I must be a proper subset of 1.." + std::to_string(d.n);
    return std::nullopt;
  };
  switch (d.tag) {
    case FamilyTag::DI:
      if (d.n < 1) return "n must be >= 1";
      return check_index_set(false, false);
    case FamilyTag::NT:
    case FamilyTag::SL:
      return std::nullopt;
    case FamilyTag::V1star:
      if (d.n < 1) return "n must be >= 1";
      return check_index_set(true, false);
    case FamilyTag::V2:
      if (d.n < 2) return "n must be >= 2";
      return check_index_set(true, true);
    case FamilyTag::Vee:
      if (d.inner.size() != 2) return "vee needs two operands";
      for (const auto& in : d.inner) {
        if (auto e = domain_error(in)) return e;
      }
      return std::nullopt;
    case FamilyTag::W1star:
    case FamilyTag::W2:
      if (d.n < 3) return "n must be >= 3";
      if (d.p > d.n - 3) return "p must lie in 0..n-3";
      if (d.inner.size() != 1) return "W needs the 3x3 block F";
      if (d.inner[0].size() != 3) return "F must be a 3x3 family";
      return domain_error(d.inner[0]);
    case FamilyTag::LoewyRadwan:
      if (d.k < 1 || d.k > d.n) return "k must lie in 1..n";
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

[[noreturn]] void bad_descriptor(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::BadDescriptor, "'" + std::string(text) + "': " + why);
}

// Splits "(A)|(B)|..." into its parenthesized operands.
std::vector<std::string_view> split_operands(std::string_view body, std::string_view whole) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < body.size() && body[pos] == ' ') ++pos;
    if (pos >= body.size() || body[pos] != '(') bad_descriptor(whole, "expected '(' in vee operand list");
    int depth = 0;
    std::size_t start = pos;
    for (; pos < body.size(); ++pos) {
      if (body[pos] == '(') ++depth;
      if (body[pos] == ')' && --depth == 0) break;
    }
    if (pos >= body.size()) bad_descriptor(whole, "unbalanced parentheses");
    out.push_back(body.substr(start + 1, pos - start - 1));
    ++pos;
    while (pos < body.size() && body[pos] == ' ') ++pos;
    if (pos == body.size()) return out;
    if (body[pos] != '|') bad_descriptor(whole, "expected '|' between vee operands");
    ++pos;
  }
}

std::size_t parse_size(std::string_view v, std::string_view whole, const char* key) {
  std::uint64_t x = 0;
  if (!text::parse_u64(text::trim(v), x) || x > 4096) bad_descriptor(whole, std::string("bad value for ") + key);
  return static_cast<std::size_t>(x);
}

}  // namespace

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::DI: return "DI";
    case FamilyTag::NT: return "NT";
    case FamilyTag::SL: return "SL";
    case FamilyTag::V1star: return "V1star";
    case FamilyTag::V2: return "V2";
    case FamilyTag::Vee: return "Vee";
    case FamilyTag::G4: return "G4";
    case FamilyTag::G4prime: return "G4prime";
    case FamilyTag::Fdelta: return "Fdelta";
    case FamilyTag::Gdelta: return "Gdelta";
    case FamilyTag::W1star: return "W1star";
    case FamilyTag::W2: return "W2";
    case FamilyTag::Hchar2: return "Hchar2";
    case FamilyTag::LoewyRadwan: return "LoewyRadwan";
  }
  return "?";
}

FamilyDescriptor FamilyDescriptor::di(std::size_t n, std::vector<std::size_t> I) {
  FamilyDescriptor d;
  d.tag = FamilyTag::DI;
  d.n = n;
  d.I = std::move(I);
  return d;
}

FamilyDescriptor FamilyDescriptor::nt(std::size_t n) {
  FamilyDescriptor d;
  d.tag = FamilyTag::NT;
  d.n = n;
  return d;
}

FamilyDescriptor FamilyDescriptor::sl(std::size_t n) {
  FamilyDescriptor d;
  d.tag = FamilyTag::SL;
  d.n = n;
  return d;
}

FamilyDescriptor FamilyDescriptor::v1star(std::size_t n, std::vector<std::size_t> I) {
  FamilyDescriptor d = di(n, std::move(I));
  d.tag = FamilyTag::V1star;
  return d;
}

FamilyDescriptor FamilyDescriptor::v2(std::size_t n, std::vector<std::size_t> I) {
  FamilyDescriptor d = di(n, std::move(I));
  d.tag = FamilyTag::V2;
  return d;
}

FamilyDescriptor FamilyDescriptor::vee(FamilyDescriptor a, FamilyDescriptor b) {
  FamilyDescriptor d;
  d.tag = FamilyTag::Vee;
  d.inner = {std::move(a), std::move(b)};
  d.n = d.size();
  return d;
}

FamilyDescriptor FamilyDescriptor::g4() {
  FamilyDescriptor d;
  d.tag = FamilyTag::G4;
  d.n = 4;
  return d;
}

FamilyDescriptor FamilyDescriptor::g4prime() {
  FamilyDescriptor d = g4();
  d.tag = FamilyTag::G4prime;
  return d;
}

FamilyDescriptor FamilyDescriptor::fdelta(std::int64_t delta) {
  FamilyDescriptor d;
  d.tag = FamilyTag::Fdelta;
  d.n = 3;
  d.delta = delta;
  return d;
}

FamilyDescriptor FamilyDescriptor::gdelta(std::int64_t delta) {
  FamilyDescriptor d = fdelta(delta);
  d.tag = FamilyTag::Gdelta;
  return d;
}

FamilyDescriptor FamilyDescriptor::w1star(std::size_t n, std::size_t p, FamilyDescriptor f) {
  FamilyDescriptor d;
  d.tag = FamilyTag::W1star;
  d.n = n;
  d.p = p;
  d.inner = {std::move(f)};
  return d;
}

FamilyDescriptor FamilyDescriptor::w2(std::size_t n, std::size_t p, FamilyDescriptor f) {
  FamilyDescriptor d = w1star(n, p, std::move(f));
  d.tag = FamilyTag::W2;
  return d;
}

FamilyDescriptor FamilyDescriptor::hchar2() {
  FamilyDescriptor d;
  d.tag = FamilyTag::Hchar2;
  d.n = 4;
  return d;
}

FamilyDescriptor FamilyDescriptor::loewy_radwan(std::size_t n, std::size_t k) {
  FamilyDescriptor d;
  d.tag = FamilyTag::LoewyRadwan;
  d.n = n;
  d.k = k;
  return d;
}

std::size_t FamilyDescriptor::size() const {
  switch (tag) {
    case FamilyTag::Vee: {
      std::size_t s = 0;
      for (const auto& in : inner) s += in.size();
      return s;
    }
    case FamilyTag::G4:
    case FamilyTag::G4prime:
    case FamilyTag::Hchar2:
      return 4;
    case FamilyTag::Fdelta:
    case FamilyTag::Gdelta:
      return 3;
    default:
      return n;
  }
}

FamilyDescriptor FamilyDescriptor::parse(std::string_view text) {
  const std::string_view s = text::trim(text);
  const auto colon = s.find(':');
  const std::string_view head = text::trim(s.substr(0, colon));
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);

  FamilyDescriptor d;
  if (head == "vee") {
    auto ops = split_operands(body, text);
    if (ops.size() < 2) bad_descriptor(text, "vee needs at least two operands");
    d = vee(parse(ops[0]), parse(ops[1]));
    for (std::size_t i = 2; i < ops.size(); ++i) d = vee(std::move(d), parse(ops[i]));
    if (auto e = domain_error(d)) bad_descriptor(text, *e);
    return d;
  }

  // key=value pairs; I takes the following bare integers, F takes the rest.
  std::optional<std::size_t> n, p, k;
  std::optional<std::int64_t> delta;
  std::optional<std::vector<std::size_t>> I;
  std::optional<FamilyDescriptor> F;
  std::string_view params = body;
  if (auto fpos = params.find("F="); fpos != std::string_view::npos) {
    F = parse(params.substr(fpos + 2));
    params = params.substr(0, fpos);
    while (!params.empty() && (params.back() == ',' || params.back() == ' ')) params.remove_suffix(1);
  }
  std::string current;
  if (!text::trim(params).empty()) {
    for (auto tok : text::split(params, ',')) {
      tok = text::trim(tok);
      auto eq = tok.find('=');
      if (eq == std::string_view::npos) {
        if (current != "I") bad_descriptor(text, "unexpected token '" + std::string(tok) + "'");
        I->push_back(parse_size(tok, text, "I"));
        continue;
      }
      current = std::string(text::trim(tok.substr(0, eq)));
      const std::string_view val = text::trim(tok.substr(eq + 1));
      if (current == "n") {
        n = parse_size(val, text, "n");
      } else if (current == "p") {
        p = parse_size(val, text, "p");
      } else if (current == "k") {
        k = parse_size(val, text, "k");
      } else if (current == "d") {
        std::int64_t x = 0;
        if (!text::parse_i64(val, x)) bad_descriptor(text, "bad value for d");
        delta = x;
      } else if (current == "I") {
        I.emplace();
        if (!val.empty()) I->push_back(parse_size(val, text, "I"));
      } else {
        bad_descriptor(text, "unknown parameter '" + current + "'");
      }
    }
  }
  auto need = [&](const auto& opt, const char* key) {
    if (!opt) bad_descriptor(text, std::string("missing parameter ") + key);
    return *opt;
  };
  auto reject_extra = [&](bool extra) {
    if (extra) bad_descriptor(text, "parameter not used by this family");
  };

  if (head == "di" || head == "v1star" || head == "v2") {
    reject_extra(p || k || delta || F);
    std::vector<std::size_t> idx = need(I, "I");
    const std::size_t nn = need(n, "n");
    d = head == "di" ? di(nn, idx) : head == "v1star" ? v1star(nn, idx) : v2(nn, idx);
  } else if (head == "nt" || head == "sl") {
    reject_extra(p || k || delta || F || I);
    d = head == "nt" ? nt(need(n, "n")) : sl(need(n, "n"));
  } else if (head == "g4" || head == "g4p" || head == "g4prime" || head == "h4" || head == "hchar2") {
    reject_extra(n || p || k || delta || F || I);
    d = head == "g4" ? g4() : (head == "h4" || head == "hchar2") ? hchar2() : g4prime();
  } else if (head == "fdelta" || head == "gdelta") {
    reject_extra(n || p || k || F || I);
    d = head == "fdelta" ? fdelta(need(delta, "d")) : gdelta(need(delta, "d"));
  } else if (head == "w1star" || head == "w2") {
    reject_extra(k || delta || I);
    d = head == "w1star" ? w1star(need(n, "n"), need(p, "p"), need(F, "F")) : w2(need(n, "n"), need(p, "p"), need(F, "F"));
  } else if (head == "lr") {
    reject_extra(p || delta || F || I);
    d = loewy_radwan(need(n, "n"), need(k, "k"));
  } else {
    bad_descriptor(text, "unknown family '" + std::string(head) + "'");
  }
  if (auto e = domain_error(d)) bad_descriptor(text, *e);
  return d;
}

std::string FamilyDescriptor::to_string() const {
  auto index_list = [&]() {
    std::string s;
    for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i]);
    return s;
  };
  switch (tag) {
    case FamilyTag::DI: return "di:n=" + std::to_string(n) + ",I=" + index_list();
    case FamilyTag::NT: return "nt:n=" + std::to_string(n);
    case FamilyTag::SL: return "sl:n=" + std::to_string(n);
    case FamilyTag::V1star: return "v1star:n=" + std::to_string(n) + ",I=" + index_list();
    case FamilyTag::V2: return "v2:n=" + std::to_string(n) + ",I=" + index_list();
    case FamilyTag::Vee: {
      std::string s = "vee:";
      for (std::size_t i = 0; i < inner.size(); ++i) s += (i ? "|(" : "(") + inner[i].to_string() + ")";
      return s;
    }
    case FamilyTag::G4: return "g4";
    case FamilyTag::G4prime: return "g4p";
    case FamilyTag::Fdelta: return "fdelta:d=" + std::to_string(delta);
    case FamilyTag::Gdelta: return "gdelta:d=" + std::to_string(delta);
    case FamilyTag::W1star:
      return "w1star:n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",F=" + inner.at(0).to_string();
    case FamilyTag::W2:
      return "w2:n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",F=" + inner.at(0).to_string();
    case FamilyTag::Hchar2: return "h4";
    case FamilyTag::LoewyRadwan: return "lr:n=" + std::to_string(n) + ",k=" + std::to_string(k);
  }
  return {};
}

MatSpace vee(const MatSpace& a, const MatSpace& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "vee operands over different fields");
  if (a.n() == 0) return b;
  if (b.n() == 0) return a;
  const Field& f = a.field();
  const std::size_t na = a.n();
  const std::size_t nb = b.n();
  const std::size_t n = na + nb;
  std::vector<Vec> rows;
  for (const auto& r : a.rows()) {
    Vec v(n * n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j) v[i * n + j] = r[i * na + j];
    rows.push_back(std::move(v));
  }
  for (const auto& r : b.rows()) {
    Vec v(n * n);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) v[(na + i) * n + na + j] = r[i * nb + j];
    rows.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) rows.push_back(unit_vec(n, i, na + j, f));
  return MatSpace(f, n, std::move(rows));
}

MatSpace with_scalars(const MatSpace& v) { return extend(v, Mat::identity(v.field(), v.n())); }

MatSpace build(const FamilyDescriptor& d, const Field& f) {
  if (auto e = domain_error(d)) throw Error(ErrorCode::BadParameters, d.to_string() + ": " + *e);
  const std::size_t n = d.size();
  std::vector<Vec> rows;
  switch (d.tag) {
    case FamilyTag::DI:
      rows.push_back(d_vec(n, d.I, f));
      break;
    case FamilyTag::NT:
      add_nt(rows, n, f);
      break;
    case FamilyTag::SL:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) rows.push_back(unit_vec(n, i, j, f));
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Vec v = unit_vec(n, i, i, f);
        v[(n - 1) * n + n - 1] = f.neg(f.one());
        rows.push_back(std::move(v));
      }
      break;
    case FamilyTag::V1star:
      rows.push_back(d_vec(n, d.I, f));
      add_nt(rows, n, f);
      break;
    case FamilyTag::V2:
      rows.push_back(identity_vec(n, f));
      rows.push_back(d_vec(n, d.I, f));
      add_nt(rows, n, f);
      break;
    case FamilyTag::Vee:
      return vee(build(d.inner[0], f), build(d.inner[1], f));
    case FamilyTag::G4:
    case FamilyTag::G4prime: {
      const bool transposed = d.tag == FamilyTag::G4prime;
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
          rows.push_back(units(4, {{a, b}, transposed ? Entry{b + 2, a + 2} : Entry{a + 2, b + 2}}, f));
          rows.push_back(unit_vec(4, a, b + 2, f));
        }
      }
      break;
    }
    case FamilyTag::Fdelta:
    case FamilyTag::Gdelta: {
      if (f.characteristic() != 3) throw Error(ErrorCode::CharMismatch, d.to_string() + " needs characteristic 3");
      const Fe delta = delta_of(d.delta, f);
      const Fe m1 = f.neg(f.one());
      rows.push_back(identity_vec(3, f));
      rows.push_back(units(3, {{0, 1}, {2, 0}}, f));
      Vec b(9);
      b[1 * 3 + 2] = f.one();
      b[2 * 3 + 0] = delta;
      rows.push_back(std::move(b));
      Vec c(9);
      if (d.tag == FamilyTag::Fdelta) {
        // [[1,0,1],[-1,0,0],[-1,-delta,-1]]
        c[0] = f.one();
        c[2] = f.one();
        c[3] = m1;
        c[6] = m1;
        c[7] = f.neg(delta);
        c[8] = m1;
      } else {
        // [[0,0,1],[-1,0,0],[0,-delta,0]]
        c[2] = f.one();
        c[3] = m1;
        c[7] = f.neg(delta);
      }
      rows.push_back(std::move(c));
      break;
    }
    case FamilyTag::W1star:
    case FamilyTag::W2: {
      MatSpace F = build(d.inner[0], f);
      MatSpace w = vee(vee(build(FamilyDescriptor::nt(d.p), f), F), build(FamilyDescriptor::nt(n - d.p - 3), f));
      return d.tag == FamilyTag::W2 ? with_scalars(w) : w;
    }
    case FamilyTag::Hchar2:
      if (f.characteristic() != 2) throw Error(ErrorCode::CharMismatch, "h4 needs characteristic 2");
      rows.push_back(identity_vec(4, f));
      rows.push_back(units(4, {{0, 1}, {3, 2}}, f));  // l1
      rows.push_back(units(4, {{0, 2}, {3, 1}}, f));  // l2
      rows.push_back(units(4, {{0, 3}, {2, 1}}, f));  // x
      rows.push_back(units(4, {{1, 0}, {2, 3}}, f));  // c2
      rows.push_back(units(4, {{1, 2}, {3, 0}}, f));  // y
      rows.push_back(units(4, {{1, 3}, {2, 0}}, f));  // c1
      break;
    case FamilyTag::LoewyRadwan: {
      const std::size_t top = d.k - 1;
      for (std::size_t i = 0; i < top; ++i)
        for (std::size_t j = 0; j < n; ++j) rows.push_back(unit_vec(n, i, j, f));
      for (std::size_t i = top; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) rows.push_back(unit_vec(n, i, j, f));
      Vec diag(n * n);
      for (std::size_t i = top; i < n; ++i) diag[i * n + i] = f.one();
      rows.push_back(std::move(diag));
      break;
    }
  }
  return MatSpace(f, n, std::move(rows));
}

// ---- exceptional spaces ----

namespace {

void require_char3_n3(const MatSpace& v) {
  if (v.field().characteristic() != 3) throw Error(ErrorCode::CharMismatch, "needs characteristic 3");
  if (v.n() != 3) throw Error(ErrorCode::DimensionMismatch, "needs a subspace of M_3");
}

struct AffineSolution {
  Vec particular;
  std::vector<Vec> directions;
};

// Values for the free entries making fixed + sum a_i E_{free_i} a member.
std::optional<AffineSolution> solve_template(const MatSpace& v, const Mat& fixed, const std::vector<Entry>& free) {
  const Field& f = v.field();
  const std::size_t n = v.n();
  const std::size_t m = free.size();
  std::vector<Vec> aug;
  for (const auto& form : v.annihilator()) {
    Vec row(m + 1);
    for (std::size_t i = 0; i < m; ++i) row[i] = form[free[i].first * n + free[i].second];
    Fe rhs{};
    for (std::size_t i = 0; i < n * n; ++i) rhs = f.add(rhs, f.mul(form[i], fixed.entries()[i]));
    row[m] = f.neg(rhs);
    aug.push_back(std::move(row));
  }
  auto pivots = linalg::rref(f, aug);
  if (!pivots.empty() && pivots.back() == m) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(m, Fe{});
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug[r][m];
  std::vector<Vec> coeff;
  for (auto& row : aug) coeff.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m));
  sol.directions = linalg::nullspace(f, std::move(coeff), m);
  return sol;
}

// The third-row corner value of a solved template is forced to zero.
bool corner_forced_zero(const AffineSolution& s) { return s.directions.empty() && s.particular[0] == Fe{}; }

}  // namespace

bool is_exceptional(const MatSpace& v, const ExecConfig& config) {
  require_char3_n3(v);
  if (v.dim() != 4) return false;
  const SpectrumQuery one_bar{1, Location::Closure, false};
  if (!check_spec(v, one_bar, CheckMode::exhaustive(), config).holds) return false;
  const std::uint64_t points = projective_count(v.field().order(), 3);
  if (points > config.survey_limit) throw Error(ErrorCode::BudgetExceeded, "too many projective points");
  for (std::uint64_t r = 0; r < points; ++r) {
    if (image_dim(v, projective_point(v.field(), 3, r)) < 2) return false;
  }
  return true;
}

bool reduced_form(const MatSpace& v, ReducedLevel level, const ExecConfig& config) {
  require_char3_n3(v);
  if (!is_exceptional(v, config)) return false;
  const Field& f = v.field();
  if (level == ReducedLevel::Fully) {
    if (f.order() > config.survey_limit) throw Error(ErrorCode::BudgetExceeded, "too many delta values");
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      const auto delta = static_cast<std::int64_t>(i);
      if (v == build(FamilyDescriptor::fdelta(delta), f) || v == build(FamilyDescriptor::gdelta(delta), f)) return true;
    }
    return false;
  }
  auto t1 = solve_template(v, Mat::unit(f, 3, 0, 1), {{2, 0}});
  auto t2 = solve_template(v, Mat::unit(f, 3, 1, 2), {{2, 0}});
  auto t3 = solve_template(v, Mat::unit(f, 3, 0, 2), {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}});
  if (!t1 || !t2 || !t3) return false;
  if (level == ReducedLevel::Semi) return true;
  return !(corner_forced_zero(*t1) && corner_forced_zero(*t2));
}

}  // namespace specspace
