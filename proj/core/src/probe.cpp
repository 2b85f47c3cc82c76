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

#include "specspace/probe.hpp"

#include <algorithm>
#include <atomic>

#include "specspace/enumerate.hpp"

namespace specspace {

namespace {

void require_projective_budget(const MatSpace& v, const ExecConfig& config) {
  if (projective_count(v.field().order(), v.n()) > config.survey_limit) {
    throw Error(ErrorCode::BudgetExceeded, "projective point count exceeds the survey limit");
  }
}

// Rows l with x.l in V.
std::vector<Vec> rank_one_rows(const MatSpace& v, std::span<const Fe> x) {
  const Field& f = v.field();
  const std::size_t n = v.n();
  std::vector<Vec> eqs;
  for (const auto& form : v.annihilator()) {
    Vec row(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == Fe{}) continue;
      for (std::size_t j = 0; j < n; ++j) row[j] = f.add(row[j], f.mul(x[i], form[i * n + j]));
    }
    eqs.push_back(std::move(row));
  }
  return linalg::nullspace(f, std::move(eqs), n);
}

std::optional<std::size_t> nilpotent_span(const MatSpace& v, const ExecConfig& config) {
  if (saturating_pow(v.field().order(), v.dim()) > config.exhaustive_limit) return std::nullopt;
  const Field& f = v.field();
  const std::size_t n = v.n();
  linalg::CharpolyWorkspace ws(f, n);
  std::vector<Fe> coeffs;
  MatSpace acc(f, n);
  // Nilpotency and spans are scale invariant: one representative per line.
  MemberCursor cur(v, true);
  cur.seek(0);
  do {
    ws.compute(cur.entries(), coeffs);
    const bool nilpotent = std::all_of(coeffs.begin(), coeffs.end() - 1, [](Fe c) { return c == Fe{}; });
    if (nilpotent && !acc.contains(cur.entries())) {
      acc = extend(acc, cur.matrix());
      if (acc.dim() == v.dim()) break;
    }
  } while (cur.next());
  return acc.dim();
}

}  // namespace

bool is_mult_closed(const MatSpace& v) {
  const auto basis = v.basis_matrices();
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (!v.contains(a * b)) return false;
  return true;
}

bool has_rank1_trace1(const MatSpace& v, const ExecConfig& config) {
  require_projective_budget(v, config);
  const Field& f = v.field();
  const std::size_t n = v.n();
  const std::uint64_t points = projective_count(f.order(), n);
  for (std::uint64_t r = 0; r < points; ++r) {
    const Vec x = projective_point(f, n, r);
    for (const auto& l : rank_one_rows(v, x)) {
      Fe t{};
      for (std::size_t i = 0; i < n; ++i) t = f.add(t, f.mul(l[i], x[i]));
      if (t != Fe{}) return true;
    }
  }
  return false;
}

InvariantProfile invariant_battery(const MatSpace& v, const ExecConfig& config) {
  require_projective_budget(v, config);
  InvariantProfile prof;
  prof.dim = v.dim();
  prof.mult_closed = is_mult_closed(v);
  prof.rank1_trace1 = has_rank1_trace1(v, config);
  const std::uint64_t points = projective_count(v.field().order(), v.n());
  for (std::uint64_t r = 0; r < points; ++r) {
    prof.image_profile.push_back(image_dim(v, projective_point(v.field(), v.n(), r)));
  }
  std::sort(prof.image_profile.begin(), prof.image_profile.end());
  for (const auto& rep : good_vector_survey(v, config)) prof.good_count += rep.is_good ? 1 : 0;
  prof.nilpotent_span_dim = nilpotent_span(v, config);
  return prof;
}

std::optional<std::string> distinguishing_invariant(const InvariantProfile& a, const InvariantProfile& b) {
  if (a.dim != b.dim) return "dim";
  if (a.mult_closed != b.mult_closed) return "mult_closed";
  if (a.rank1_trace1 != b.rank1_trace1) return "rank1_trace1";
  if (a.image_profile != b.image_profile) return "image_profile";
  if (a.good_count != b.good_count) return "good_count";
  if (a.nilpotent_span_dim && b.nilpotent_span_dim && *a.nilpotent_span_dim != *b.nilpotent_span_dim) {
    return "nilpotent_span_dim";
  }
  return std::nullopt;
}

bool similar_witness(const MatSpace& v, const MatSpace& w, const Mat& p) { return conjugate(v, p) == w; }

std::uint64_t for_each_invertible(const Field& f, std::size_t n, const std::function<bool(const Mat&)>& fn) {
  const std::uint64_t total = saturating_pow(f.order(), n * n);
  if (total == kSaturated) throw Error(ErrorCode::BudgetExceeded, "matrix count overflows");
  std::vector<std::uint32_t> digits(n * n);
  std::uint64_t seen = 0;
  Mat p(f, n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode_digits(idx, f.order(), digits);
    for (std::size_t i = 0; i < n * n; ++i) p.entries()[i] = f.element(digits[i]);
    if (!p.is_invertible()) continue;
    ++seen;
    if (!fn(p)) break;
  }
  return seen;
}

std::optional<Mat> similar_brute(const MatSpace& v, const MatSpace& w, const ExecConfig& config) {
  if (!(v.field() == w.field())) throw Error(ErrorCode::FieldMismatch, "spaces over different fields");
  if (v.n() != w.n()) throw Error(ErrorCode::DimensionMismatch, "spaces of different sizes");
  const Field& f = v.field();
  const std::size_t n = v.n();
  const std::uint64_t gl = gl_order(f.order(), n);
  if (gl > config.gl_limit) {
    throw Error(ErrorCode::BudgetExceeded, "|GL_n(q)| = " + std::to_string(gl) + " exceeds the limit " +
                                               std::to_string(config.gl_limit));
  }
  if (v.dim() != w.dim()) return std::nullopt;
  const std::uint64_t total = saturating_pow(f.order(), n * n);
  const auto basis = v.basis_matrices();
  auto decode = [&](std::uint64_t idx, std::vector<std::uint32_t>& digits, Mat& p) {
    decode_digits(idx, f.order(), digits);
    for (std::size_t i = 0; i < n * n; ++i) p.entries()[i] = f.element(digits[i]);
  };
  auto hit = find_first(total, config.resolved_threads(), [&]() {
    return [&, digits = std::vector<std::uint32_t>(n * n), p = Mat(f, n)](
               std::uint64_t begin, std::uint64_t end) mutable -> std::optional<std::uint64_t> {
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        decode(idx, digits, p);
        if (!p.is_invertible()) continue;
        const Mat pinv = p.inverse();
        bool ok = true;
        for (const auto& b : basis) {
          if (!w.contains(p * b * pinv)) {
            ok = false;
            break;
          }
        }
        if (ok) return idx;
      }
      return std::nullopt;
    };
  }, 1024);
  if (!hit) return std::nullopt;
  std::vector<std::uint32_t> digits(n * n);
  Mat p(f, n);
  decode(*hit, digits, p);
  return p;
}

bool normalizer_check(const Mat& p) {
  const std::size_t n = p.n();
  const Mat pinv = p.inverse();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mat c = p * Mat::unit(p.field(), n, i, j) * pinv;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s <= r; ++s)
          if (c.at(r, s) != Fe{}) return false;
    }
  }
  return true;
}

SimilarityDecision decide_similarity(const MatSpace& v, const MatSpace& w, const ExecConfig& config) {
  SimilarityDecision d;
  if (!(v.field() == w.field())) throw Error(ErrorCode::FieldMismatch, "spaces over different fields");
  if (v.n() != w.n()) {
    d.verdict = Verdict::NotSimilar;
    d.reason = "n";
    return d;
  }
  d.left = invariant_battery(v, config);
  d.right = invariant_battery(w, config);
  if (auto name = distinguishing_invariant(d.left, d.right)) {
    d.verdict = Verdict::NotSimilar;
    d.reason = *name;
    return d;
  }
  if (gl_order(v.field().order(), v.n()) > config.gl_limit) {
    d.verdict = Verdict::Unknown;
    d.reason = "profiles agree; GL scan over budget";
    return d;
  }
  if (auto p = similar_brute(v, w, config)) {
    d.verdict = Verdict::SimilarWithWitness;
    d.witness = std::move(p);
  } else {
    d.verdict = Verdict::NotSimilar;
    d.reason = "gl-scan";
  }
  return d;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SimilarWithWitness: return "SimilarWithWitness";
    case Verdict::NotSimilar: return "NotSimilar";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

}  // namespace specspace
