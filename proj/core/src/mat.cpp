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

#include "specspace/mat.hpp"

#include <algorithm>

#include "text_util.hpp"

namespace specspace {

namespace {

void require_compatible(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "matrix fields differ");
  if (a.n() != b.n()) throw Error(ErrorCode::DimensionMismatch, "matrix sizes differ");
}

std::vector<Vec> rows_of(const Mat& m) {
  std::vector<Vec> rows(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) {
    rows[i].assign(m.entries().begin() + static_cast<std::ptrdiff_t>(i * m.n()),
                   m.entries().begin() + static_cast<std::ptrdiff_t>((i + 1) * m.n()));
  }
  return rows;
}

}  // namespace

Mat::Mat(Field field, std::size_t n, std::vector<Fe> entries)
    : field_(std::move(field)), n_(n), a_(std::move(entries)) {
  if (a_.size() != n_ * n_) throw Error(ErrorCode::DimensionMismatch, "entry count is not n^2");
  for (auto e : a_) {
    if (e.v >= field_.order()) throw Error(ErrorCode::BadParameters, "entry outside field");
  }
}

Mat Mat::identity(const Field& field, std::size_t n) {
  Mat m(field, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

Mat Mat::unit(const Field& field, std::size_t n, std::size_t i, std::size_t j) {
  Mat m(field, n);
  m.set(i, j, field.one());
  return m;
}

Mat Mat::from_ints(const Field& field, std::size_t n, std::initializer_list<std::int64_t> entries) {
  std::vector<Fe> a;
  for (auto v : entries) a.push_back(field.from_int(v));
  return Mat(field, n, std::move(a));
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Fe e) { return e == Fe{}; });
}

Mat Mat::transpose() const {
  Mat t(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t.set(j, i, at(i, j));
  return t;
}

Mat Mat::scaled(Fe c) const {
  Mat out(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.mul(c, a_[i]);
  return out;
}

Vec Mat::apply(std::span<const Fe> x) const {
  if (x.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from n");
  Vec y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Fe acc{};
    for (std::size_t j = 0; j < n_; ++j) acc = field_.add(acc, field_.mul(at(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

Fe Mat::trace() const {
  Fe acc{};
  for (std::size_t i = 0; i < n_; ++i) acc = field_.add(acc, at(i, i));
  return acc;
}

Fe Mat::det() const {
  std::vector<Vec> rows = rows_of(*this);
  Fe d = field_.one();
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && rows[piv][col] == Fe{}) ++piv;
    if (piv == n_) return Fe{};
    if (piv != col) {
      std::swap(rows[piv], rows[col]);
      d = field_.neg(d);
    }
    const Fe p = rows[col][col];
    d = field_.mul(d, p);
    const Fe pinv = field_.inv(p);
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (rows[r][col] == Fe{}) continue;
      const Fe f = field_.mul(rows[r][col], pinv);
      for (std::size_t c = col; c < n_; ++c) rows[r][c] = field_.sub(rows[r][c], field_.mul(f, rows[col][c]));
    }
  }
  return d;
}

std::size_t Mat::rank() const { return linalg::rank(field_, rows_of(*this)); }

std::vector<Vec> Mat::kernel() const { return linalg::nullspace(field_, rows_of(*this), n_); }

Mat Mat::inverse() const {
  // Row-reduce [M | I].
  std::vector<Vec> rows(n_, Vec(2 * n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = at(i, j);
    rows[i][n_ + i] = field_.one();
  }
  auto pivots = linalg::rref(field_, rows);
  if (pivots.size() < n_ || pivots[n_ - 1] != n_ - 1) throw Error(ErrorCode::SingularP, "matrix is singular");
  Mat inv(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) inv.set(i, j, rows[i][n_ + j]);
  return inv;
}

Poly Mat::charpoly() const {
  linalg::CharpolyWorkspace ws(field_, n_);
  std::vector<Fe> out;
  ws.compute(a_, out);
  return Poly(field_, std::move(out));
}

std::string Mat::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ",";
      out += field_.format(at(i, j));
    }
    out += "\n";
  }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_compatible(a, b);
  Mat out(a.field_, a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.field_.add(a.a_[i], b.a_[i]);
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_compatible(a, b);
  Mat out(a.field_, a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.field_.sub(a.a_[i], b.a_[i]);
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_compatible(a, b);
  const Field& f = a.field_;
  const std::size_t n = a.n_;
  Mat out(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Fe aik = a.a_[i * n + k];
      if (aik == Fe{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out.a_[i * n + j] = f.add(out.a_[i * n + j], f.mul(aik, b.a_[k * n + j]));
      }
    }
  }
  return out;
}

SpectrumQuery SpectrumQuery::parse(std::string_view literal) {
  const std::string_view s = text::trim(literal);
  auto colon = s.find(':');
  std::string_view head = s.substr(0, colon);
  std::uint64_t k = 0;
  SpectrumQuery q;
  auto bad = [&]() {
    return ParseError("unknown query '" + std::string(literal) +
                          "' (expected kspec:K, kspec-closure:K, kstar:K, kstar-closure:K)",
                      1, 1);
  };
  if (colon != std::string_view::npos) {
    if (!text::parse_u64(text::trim(s.substr(colon + 1)), k)) throw bad();
    if (head == "kspec") {
      q = {static_cast<unsigned>(k), Location::BaseField, false};
    } else if (head == "kspec-closure") {
      q = {static_cast<unsigned>(k), Location::Closure, false};
    } else if (head == "kstar") {
      q = {static_cast<unsigned>(k), Location::BaseField, true};
    } else if (head == "kstar-closure") {
      q = {static_cast<unsigned>(k), Location::Closure, true};
    } else {
      throw bad();
    }
    return q;
  }
  // Short forms: <k>spec[-closure], <k>star[-closure].
  std::size_t digits = 0;
  while (digits < s.size() && s[digits] >= '0' && s[digits] <= '9') ++digits;
  if (digits == 0 || !text::parse_u64(s.substr(0, digits), k)) throw bad();
  std::string_view rest = s.substr(digits);
  if (rest == "spec") return {static_cast<unsigned>(k), Location::BaseField, false};
  if (rest == "spec-closure") return {static_cast<unsigned>(k), Location::Closure, false};
  if (rest == "star") return {static_cast<unsigned>(k), Location::BaseField, true};
  if (rest == "star-closure") return {static_cast<unsigned>(k), Location::Closure, true};
  throw bad();
}

std::string SpectrumQuery::to_string() const {
  std::string head = exclude_zero ? "kstar" : "kspec";
  if (location == Location::Closure) head += "-closure";
  return head + ":" + std::to_string(bound);
}

EigCount count_eigs(const Poly& charpoly, const SpectrumQuery& query) {
  std::size_t count = query.location == Location::Closure ? count_roots_in_closure(charpoly)
                                                          : count_roots_in_field(charpoly);
  if (query.exclude_zero && charpoly.coeff(0) == Fe{}) --count;
  return {count, count <= query.bound};
}

EigCount count_eigs(const Mat& m, const SpectrumQuery& query) { return count_eigs(m.charpoly(), query); }

namespace linalg {

std::vector<std::size_t> rref(const Field& field, std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == Fe{}) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Fe inv = field.inv(rows[r][col]);
    for (std::size_t c = col; c < ncols; ++c) rows[r][c] = field.mul(rows[r][c], inv);
    for (std::size_t other = 0; other < rows.size(); ++other) {
      if (other == r || rows[other][col] == Fe{}) continue;
      const Fe f = rows[other][col];
      for (std::size_t c = col; c < ncols; ++c) {
        rows[other][c] = field.sub(rows[other][c], field.mul(f, rows[r][c]));
      }
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vec> nullspace(const Field& field, std::vector<Vec> rows, std::size_t ncols) {
  for (auto& row : rows) {
    if (row.size() != ncols) throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
  }
  auto pivots = rref(field, rows);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols);
    v[free] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  rref(field, basis);
  return basis;
}

std::size_t rank(const Field& field, std::vector<Vec> rows) { return rref(field, rows).size(); }

CharpolyWorkspace::CharpolyWorkspace(const Field& field, std::size_t n)
    : field_(field), n_(n), prev_(n + 1), next_(n + 1), t_(n + 1), v_(n), w_(n) {}

void CharpolyWorkspace::compute(std::span<const Fe> a, std::vector<Fe>& out) {
  const Field& f = field_;
  const std::size_t n = n_;
  // prev holds det(tI - S) for the trailing principal block S, highest degree first.
  prev_[0] = f.one();
  std::size_t size = 1;
  for (std::size_t m = n; m-- > 0;) {
    const std::size_t s = n - m;  // size of the block starting at (m, m)
    t_[0] = f.one();
    t_[1] = f.neg(a[m * n + m]);
    // v = C, then v <- A1 v; t_{k+1} = -(R . v)
    for (std::size_t i = 0; i + 1 < s; ++i) v_[i] = a[(m + 1 + i) * n + m];
    for (std::size_t k = 1; k < s; ++k) {
      Fe acc{};
      for (std::size_t i = 0; i + 1 < s; ++i) acc = f.add(acc, f.mul(a[m * n + m + 1 + i], v_[i]));
      t_[k + 1] = f.neg(acc);
      if (k + 1 < s) {
        for (std::size_t i = 0; i + 1 < s; ++i) {
          Fe sum{};
          for (std::size_t j = 0; j + 1 < s; ++j) sum = f.add(sum, f.mul(a[(m + 1 + i) * n + m + 1 + j], v_[j]));
          w_[i] = sum;
        }
        std::swap(v_, w_);
      }
    }
    for (std::size_t i = 0; i <= s; ++i) {
      Fe acc{};
      const std::size_t jmax = std::min(i, size - 1);
      for (std::size_t j = 0; j <= jmax; ++j) acc = f.add(acc, f.mul(t_[i - j], prev_[j]));
      next_[i] = acc;
    }
    size = s + 1;
    std::swap(prev_, next_);
  }
  out.assign(n + 1, Fe{});
  for (std::size_t i = 0; i <= n; ++i) out[i] = prev_[n - i];
}

}  // namespace linalg

}  // namespace specspace
