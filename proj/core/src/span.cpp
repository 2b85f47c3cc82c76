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

#include "specspace/span.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include "specspace/enumerate.hpp"
#include "specspace/rng.hpp"
#include "text_util.hpp"

namespace specspace {

namespace {

Vec vectorize(const Mat& m) { return Vec(m.entries().begin(), m.entries().end()); }

Mat unvectorize(const Field& f, std::size_t n, const Vec& v) { return Mat(f, n, v); }

// Monic ascending charpoly -> distinct-eigenvalue verdict.
class SpectrumJudge {
 public:
  SpectrumJudge(const Field& f, std::size_t n, const SpectrumQuery& query)
      : field_(f), query_(query), ws_(f, n) {}

  bool satisfies(std::span<const Fe> entries) {
    ws_.compute(entries, coeffs_);
    return count_eigs(Poly(field_, coeffs_), query_).satisfies;
  }

 private:
  Field field_;
  SpectrumQuery query_;
  linalg::CharpolyWorkspace ws_;
  std::vector<Fe> coeffs_;
};

}  // namespace

MatSpace::MatSpace(Field field, std::size_t n) : field_(std::move(field)), n_(n) { canonicalize(); }

MatSpace::MatSpace(Field field, std::size_t n, std::vector<Vec> rows)
    : field_(std::move(field)), n_(n), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != n_ * n_) throw Error(ErrorCode::DimensionMismatch, "spanning vector length is not n^2");
  }
  canonicalize();
}

void MatSpace::canonicalize() {
  pivots_ = linalg::rref(field_, rows_);
  ann_ = linalg::nullspace(field_, rows_, n_ * n_);
}

MatSpace MatSpace::from_matrices(std::span<const Mat> mats) {
  if (mats.empty()) throw Error(ErrorCode::DimensionMismatch, "no matrices given; use the field-aware overload");
  return from_matrices(mats.front().field(), mats.front().n(), mats);
}

MatSpace MatSpace::from_matrices(const Field& field, std::size_t n, std::span<const Mat> mats) {
  std::vector<Vec> rows;
  for (const auto& m : mats) {
    if (!(m.field() == field)) throw Error(ErrorCode::FieldMismatch, "matrix over a different field");
    if (m.n() != n) throw Error(ErrorCode::DimensionMismatch, "matrix of a different size");
    rows.push_back(vectorize(m));
  }
  return MatSpace(field, n, std::move(rows));
}

MatSpace MatSpace::full(const Field& field, std::size_t n) {
  std::vector<Vec> rows(n * n, Vec(n * n));
  for (std::size_t i = 0; i < n * n; ++i) rows[i][i] = field.one();
  return MatSpace(field, n, std::move(rows));
}

Mat MatSpace::basis(std::size_t i) const { return unvectorize(field_, n_, rows_.at(i)); }

std::vector<Mat> MatSpace::basis_matrices() const {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(basis(i));
  return out;
}

bool MatSpace::contains(std::span<const Fe> x) const {
  if (x.size() != n_ * n_) throw Error(ErrorCode::DimensionMismatch, "vector length is not n^2");
  for (const auto& form : ann_) {
    Fe acc{};
    for (std::size_t i = 0; i < x.size(); ++i) acc = field_.add(acc, field_.mul(form[i], x[i]));
    if (acc != Fe{}) return false;
  }
  return true;
}

bool MatSpace::contains(const Mat& m) const {
  if (!(m.field() == field_)) throw Error(ErrorCode::FieldMismatch, "matrix over a different field");
  if (m.n() != n_) throw Error(ErrorCode::DimensionMismatch, "matrix of a different size");
  return contains(m.entries());
}

Mat MatSpace::member(std::span<const Fe> coeffs) const {
  if (coeffs.size() != rows_.size()) throw Error(ErrorCode::DimensionMismatch, "coefficient count differs from dim");
  Vec acc(n_ * n_);
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    if (coeffs[b] == Fe{}) continue;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = field_.add(acc[i], field_.mul(coeffs[b], rows_[b][i]));
  }
  return Mat(field_, n_, std::move(acc));
}

std::optional<Vec> MatSpace::coordinates(const Mat& m) const {
  if (!contains(m)) return std::nullopt;
  // RREF basis: the coordinate on basis b is the entry at its pivot.
  Vec c(rows_.size());
  for (std::size_t b = 0; b < rows_.size(); ++b) c[b] = m.entries()[pivots_[b]];
  return c;
}

MatSpace sum(const MatSpace& v, const MatSpace& w) {
  if (!(v.field() == w.field())) throw Error(ErrorCode::FieldMismatch, "spaces over different fields");
  if (v.n() != w.n()) throw Error(ErrorCode::DimensionMismatch, "spaces of different sizes");
  std::vector<Vec> rows = v.rows();
  rows.insert(rows.end(), w.rows().begin(), w.rows().end());
  return MatSpace(v.field(), v.n(), std::move(rows));
}

MatSpace intersect(const MatSpace& v, const MatSpace& w) {
  if (!(v.field() == w.field())) throw Error(ErrorCode::FieldMismatch, "spaces over different fields");
  if (v.n() != w.n()) throw Error(ErrorCode::DimensionMismatch, "spaces of different sizes");
  std::vector<Vec> forms = v.annihilator();
  forms.insert(forms.end(), w.annihilator().begin(), w.annihilator().end());
  const std::size_t nn = v.n() * v.n();
  return MatSpace(v.field(), v.n(), linalg::nullspace(v.field(), std::move(forms), nn));
}

MatSpace conjugate(const MatSpace& v, const Mat& p) {
  if (!(p.field() == v.field())) throw Error(ErrorCode::FieldMismatch, "conjugator over a different field");
  if (p.n() != v.n()) throw Error(ErrorCode::DimensionMismatch, "conjugator of a different size");
  const Mat pinv = p.inverse();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < v.dim(); ++i) rows.push_back(vectorize(p * v.basis(i) * pinv));
  return MatSpace(v.field(), v.n(), std::move(rows));
}

MatSpace extend(const MatSpace& v, const Mat& m) {
  if (!(m.field() == v.field())) throw Error(ErrorCode::FieldMismatch, "matrix over a different field");
  if (m.n() != v.n()) throw Error(ErrorCode::DimensionMismatch, "matrix of a different size");
  std::vector<Vec> rows = v.rows();
  rows.push_back(vectorize(m));
  return MatSpace(v.field(), v.n(), std::move(rows));
}

MatSpace transpose(const MatSpace& v) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < v.dim(); ++i) rows.push_back(vectorize(v.basis(i).transpose()));
  return MatSpace(v.field(), v.n(), std::move(rows));
}

// ---- MemberCursor ----

MemberCursor::MemberCursor(const MatSpace& space, bool projective)
    : space_(&space), projective_(projective), digits_(space.dim(), 0), m_(space.n() * space.n()) {
  const std::uint64_t q = space.field().order();
  if (projective) {
    const std::uint64_t pc = projective_count(q, space.dim());
    size_ = pc == kSaturated ? kSaturated : pc + 1;
  } else {
    size_ = saturating_pow(q, space.dim());
  }
}

void MemberCursor::add_scaled(std::size_t b, Fe c) {
  if (c == Fe{}) return;
  const Field& f = space_->field();
  const Vec& row = space_->rows()[b];
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (row[i] != Fe{}) m_[i] = f.add(m_[i], f.mul(c, row[i]));
  }
}

void MemberCursor::rebuild() {
  const Field& f = space_->field();
  std::fill(m_.begin(), m_.end(), Fe{});
  for (std::size_t b = 0; b < digits_.size(); ++b) add_scaled(b, f.element(digits_[b]));
}

void MemberCursor::seek(std::uint64_t index) {
  index_ = index;
  const std::uint64_t q = space_->field().order();
  const std::size_t d = digits_.size();
  if (!projective_) {
    decode_digits(index, q, digits_);
  } else if (index == 0 || d == 0) {
    std::fill(digits_.begin(), digits_.end(), 0);
    lead_ = d;
  } else {
    digits_ = projective_digits(index - 1, q, d);
    lead_ = projective_block(index - 1, q, d).first;
  }
  rebuild();
}

bool MemberCursor::next() {
  if (index_ + 1 >= size_) return false;
  ++index_;
  const Field& f = space_->field();
  const std::uint32_t top = static_cast<std::uint32_t>(f.order() - 1);
  const std::size_t d = digits_.size();
  const std::size_t floor = projective_ ? (lead_ >= d ? d : lead_ + 1) : 0;
  std::size_t i = d;
  while (i > floor && digits_[i - 1] == top) {
    --i;
    add_scaled(i, f.neg(f.element(top)));
    digits_[i] = 0;
  }
  if (i == floor) {
    // Odometer carried past the free digits: start of a new projective block.
    seek(index_);
    return true;
  }
  --i;
  const Fe before = f.element(digits_[i]);
  ++digits_[i];
  add_scaled(i, f.sub(f.element(digits_[i]), before));
  return true;
}

Mat MemberCursor::matrix() const { return Mat(space_->field(), space_->n(), m_); }

// ---- spectrum checks ----

namespace {

CheckResult exhaustive_check(const MatSpace& v, const SpectrumQuery& query, const ExecConfig& config) {
  const std::uint64_t total = saturating_pow(v.field().order(), v.dim());
  if (total > config.exhaustive_limit) {
    throw Error(ErrorCode::BudgetExceeded, "q^dim = " + (total == kSaturated ? std::string("overflow") : std::to_string(total)) +
                                               " exceeds the exhaustive limit " + std::to_string(config.exhaustive_limit));
  }
  CheckResult res;
  res.coverage = Coverage::Full;
  res.members_total = total;
  std::atomic<std::uint64_t> evaluations{0};
  // Scalar multiples have the same number of distinct eigenvalues, so one
  // normalized representative per line suffices.
  MemberCursor probe(v, true);
  auto hit = find_first(probe.size(), config.resolved_threads(), [&]() {
    return [&, cur = MemberCursor(v, true), judge = SpectrumJudge(v.field(), v.n(), query)](
               std::uint64_t begin, std::uint64_t end) mutable -> std::optional<std::uint64_t> {
      cur.seek(begin);
      std::uint64_t local = 0;
      std::optional<std::uint64_t> found;
      for (std::uint64_t r = begin; r < end; ++r) {
        if (r != begin) cur.next();
        ++local;
        if (!judge.satisfies(cur.entries())) {
          found = r;
          break;
        }
      }
      evaluations += local;
      return found;
    };
  });
  res.evaluations = evaluations.load();
  if (hit) {
    MemberCursor cur(v, true);
    cur.seek(*hit);
    res.holds = false;
    res.witness = cur.matrix();
    res.members_covered = res.evaluations;
  } else {
    res.members_covered = total;
  }
  return res;
}

CheckResult sampled_check(const MatSpace& v, const SpectrumQuery& query, std::uint64_t samples, std::uint64_t seed,
                          const ExecConfig& config) {
  CheckResult res;
  res.coverage = Coverage::Sampled;
  res.members_total = saturating_pow(v.field().order(), v.dim());
  const std::uint64_t q = v.field().order();
  auto draw = [&](std::uint64_t i) {
    Rng rng(seed + i * 0x9e3779b97f4a7c15ULL);
    Vec c(v.dim());
    for (auto& e : c) e = v.field().element(rng.below(q));
    return v.member(c);
  };
  std::atomic<std::uint64_t> evaluations{0};
  auto hit = find_first(samples, config.resolved_threads(), [&]() {
    return [&, judge = SpectrumJudge(v.field(), v.n(), query)](std::uint64_t begin,
                                                               std::uint64_t end) mutable -> std::optional<std::uint64_t> {
      std::uint64_t local = 0;
      std::optional<std::uint64_t> found;
      for (std::uint64_t i = begin; i < end; ++i) {
        ++local;
        if (!judge.satisfies(draw(i).entries())) {
          found = i;
          break;
        }
      }
      evaluations += local;
      return found;
    };
  });
  res.evaluations = evaluations.load();
  res.members_covered = res.evaluations;
  if (hit) {
    res.holds = false;
    res.witness = draw(*hit);
  }
  return res;
}

}  // namespace

CheckResult check_spec(const MatSpace& v, const SpectrumQuery& query, const CheckMode& mode, const ExecConfig& config) {
  switch (mode.kind) {
    case CheckMode::Kind::Exhaustive:
      return exhaustive_check(v, query, config);
    case CheckMode::Kind::Sampled:
      return sampled_check(v, query, mode.samples, mode.seed, config);
    case CheckMode::Kind::Auto:
    default: {
      const std::uint64_t limit = mode.limit ? mode.limit : config.exhaustive_limit;
      if (saturating_pow(v.field().order(), v.dim()) <= limit) {
        ExecConfig c = config;
        c.exhaustive_limit = std::max(c.exhaustive_limit, limit);
        return exhaustive_check(v, query, c);
      }
      return sampled_check(v, query, mode.samples, mode.seed, config);
    }
  }
}

CheckResult check_extension(const MatSpace& v, const Mat& m, const SpectrumQuery& query, const ExecConfig& config) {
  if (!(m.field() == v.field())) throw Error(ErrorCode::FieldMismatch, "matrix over a different field");
  if (m.n() != v.n()) throw Error(ErrorCode::DimensionMismatch, "matrix of a different size");
  const std::uint64_t total = saturating_pow(v.field().order(), v.dim());
  if (total > config.exhaustive_limit) {
    throw Error(ErrorCode::BudgetExceeded, "q^dim exceeds the exhaustive limit for an incremental check");
  }
  CheckResult res;
  res.members_total = total;
  const Field& f = v.field();
  std::atomic<std::uint64_t> evaluations{0};
  auto hit = find_first(total, config.resolved_threads(), [&]() {
    return [&, cur = MemberCursor(v, false), judge = SpectrumJudge(f, v.n(), query),
            shifted = Vec(v.n() * v.n())](std::uint64_t begin, std::uint64_t end) mutable -> std::optional<std::uint64_t> {
      cur.seek(begin);
      std::uint64_t local = 0;
      std::optional<std::uint64_t> found;
      for (std::uint64_t r = begin; r < end; ++r) {
        if (r != begin) cur.next();
        ++local;
        auto e = cur.entries();
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = f.add(m.entries()[i], e[i]);
        if (!judge.satisfies(shifted)) {
          found = r;
          break;
        }
      }
      evaluations += local;
      return found;
    };
  });
  res.evaluations = evaluations.load();
  if (hit) {
    MemberCursor cur(v, false);
    cur.seek(*hit);
    res.holds = false;
    res.witness = m + cur.matrix();
    res.members_covered = res.evaluations;
  } else {
    res.members_covered = total;
  }
  return res;
}

// ---- good vectors ----

GoodVectorReport good_vector(const MatSpace& v, std::span<const Fe> x) {
  const std::size_t n = v.n();
  const Field& f = v.field();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length differs from n");
  if (std::all_of(x.begin(), x.end(), [](Fe e) { return e == Fe{}; })) {
    throw Error(ErrorCode::ZeroVector, "good-vector test needs a nonzero vector");
  }
  // Unknown row l; x.l lies in V iff every annihilating form vanishes on it,
  // and tr(x.l) = l.x.
  std::vector<Vec> eqs;
  for (const auto& form : v.annihilator()) {
    Vec row(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == Fe{}) continue;
      for (std::size_t j = 0; j < n; ++j) row[j] = f.add(row[j], f.mul(x[i], form[i * n + j]));
    }
    eqs.push_back(std::move(row));
  }
  eqs.emplace_back(x.begin(), x.end());
  auto sol = linalg::nullspace(f, std::move(eqs), n);
  GoodVectorReport rep;
  rep.vector.assign(x.begin(), x.end());
  rep.is_good = sol.empty();
  if (!sol.empty()) rep.witness = sol.front();
  return rep;
}

std::vector<GoodVectorReport> good_vector_survey(const MatSpace& v, const ExecConfig& config) {
  const std::uint64_t count = projective_count(v.field().order(), v.n());
  if (count > config.survey_limit) {
    throw Error(ErrorCode::BudgetExceeded, "projective point count exceeds the survey limit");
  }
  std::vector<GoodVectorReport> out(count);
  parallel_for(count, config.resolved_threads(), [&]() {
    return [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t r = begin; r < end; ++r) out[r] = good_vector(v, projective_point(v.field(), v.n(), r));
    };
  }, 256);
  return out;
}

std::size_t image_dim(const MatSpace& v, std::span<const Fe> x) {
  if (x.size() != v.n()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from n");
  std::vector<Vec> images;
  for (std::size_t b = 0; b < v.dim(); ++b) images.push_back(v.basis(b).apply(x));
  return linalg::rank(v.field(), std::move(images));
}

// ---- space files ----

std::string format_space(const MatSpace& v) {
  std::string out = v.field().literal() + "\n" + std::to_string(v.n()) + " " + std::to_string(v.dim()) + "\n";
  for (std::size_t b = 0; b < v.dim(); ++b) {
    if (b) out += "\n";
    out += v.basis(b).to_text();
  }
  return out;
}

MatSpace parse_space(std::string_view text) {
  std::vector<std::string_view> lines = text::split(text, '\n');
  std::size_t li = 0;
  auto at_line = [&](std::size_t i) { return static_cast<int>(i + 1); };
  auto skip_blank = [&]() {
    while (li < lines.size() && text::trim(lines[li]).empty()) ++li;
  };
  skip_blank();
  if (li >= lines.size()) throw ParseError("missing field literal", at_line(li), 1);
  std::optional<Field> field;
  try {
    field = Field::parse(text::trim(lines[li]));
  } catch (const ParseError& e) {
    throw ParseError(e.message(), at_line(li), e.column());
  } catch (const Error& e) {
    throw ParseError(e.what(), at_line(li), 1);
  }
  ++li;
  skip_blank();
  if (li >= lines.size()) throw ParseError("missing 'n d' header", at_line(li), 1);
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  {
    std::istringstream hs{std::string(text::trim(lines[li]))};
    std::string extra;
    if (!(hs >> n >> d) || (hs >> extra) || n == 0) throw ParseError("expected 'n d' with n >= 1", at_line(li), 1);
    if (n > 64) throw ParseError("matrix size above 64 is not supported", at_line(li), 1);
  }
  ++li;
  const Field& f = *field;
  const std::size_t k = f.degree();
  const std::int64_t p = f.characteristic();
  std::vector<Vec> rows;
  for (std::uint64_t b = 0; b < d; ++b) {
    skip_blank();
    Vec m;
    m.reserve(n * n);
    for (std::uint64_t r = 0; r < n; ++r, ++li) {
      if (li >= lines.size() || text::trim(lines[li]).empty()) {
        throw ParseError("matrix " + std::to_string(b + 1) + " has fewer than " + std::to_string(n) + " rows", at_line(li), 1);
      }
      std::string_view line = lines[li];
      auto fields = text::split(line, ',');
      if (fields.size() != n * k) {
        throw ParseError("expected " + std::to_string(n * k) + " comma-separated integers, found " +
                             std::to_string(fields.size()),
                         at_line(li), 1);
      }
      std::vector<std::uint32_t> coords(k);
      for (std::size_t c = 0; c < fields.size(); ++c) {
        std::int64_t val = 0;
        if (!text::parse_i64(text::trim(fields[c]), val)) {
          const int col = static_cast<int>(fields[c].data() - line.data()) + 1;
          throw ParseError("not an integer: '" + std::string(text::trim(fields[c])) + "'", at_line(li), col);
        }
        coords[c % k] = static_cast<std::uint32_t>(((val % p) + p) % p);
        if (c % k == k - 1) m.push_back(f.from_coords(coords));
      }
    }
    rows.push_back(std::move(m));
  }
  skip_blank();
  if (li < lines.size()) throw ParseError("unexpected content after the last matrix", at_line(li), 1);
  return MatSpace(f, static_cast<std::size_t>(n), std::move(rows));
}

MatSpace read_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_space(ss.str());
}

void write_space_file(const std::string& path, const MatSpace& v) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << format_space(v);
}

}  // namespace specspace
