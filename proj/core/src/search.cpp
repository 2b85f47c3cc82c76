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

#include "specspace/search.hpp"

#include "specspace/enumerate.hpp"
#include "specspace/rng.hpp"

namespace specspace {

namespace {

Mat random_matrix(const Field& f, std::size_t n, Rng& rng) {
  Mat m(f, n);
  for (auto& e : m.entries()) e = f.element(rng.below(f.order()));
  return m;
}

}  // namespace

GrowResult grow(const MatSpace& seed, const SpectrumQuery& query, const GrowOptions& options) {
  if (!check_spec(seed, query, CheckMode::exhaustive(), options.config).holds) {
    throw Error(ErrorCode::SeedViolatesQuery, "seed space does not satisfy " + query.to_string());
  }
  GrowResult res{seed, 0, 0, {}, false};
  MatSpace current = seed;
  const Field& f = seed.field();
  const std::size_t n = seed.n();
  Rng rng(options.rng_seed);
  std::uint64_t patience = std::max<std::uint64_t>(1, options.initial_patience);
  std::uint64_t rejections = 0;
  for (; res.iterations < options.budget; ++res.iterations) {
    if (current.dim() == n * n) break;
    const Mat m = random_matrix(f, n, rng);
    bool accepted = false;
    if (!current.contains(m)) {
      CheckResult step;
      try {
        step = check_extension(current, m, query, options.config);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        res.truncated = true;
        ++res.iterations;
        break;
      }
      if (step.holds) {
        current = extend(current, m);
        accepted = true;
        ++res.accepted;
        if (current.dim() > res.best.dim()) res.best = current;
      }
    }
    if (accepted) {
      rejections = 0;
    } else if (++rejections >= patience) {
      res.restarts.push_back(res.iterations);
      current = seed;
      rejections = 0;
      patience *= 2;
    }
  }
  return res;
}

std::vector<std::size_t> complement_positions(const MatSpace& v) {
  std::vector<bool> pivot(v.n() * v.n(), false);
  for (auto p : v.pivots()) pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pivot.size(); ++i)
    if (!pivot[i]) out.push_back(i);
  return out;
}

std::vector<Mat> completion_candidates(const MatSpace& v, const SpectrumQuery& query, const ExecConfig& config) {
  const Field& f = v.field();
  const auto free = complement_positions(v);
  const std::uint64_t cosets = saturating_pow(f.order(), free.size());
  if (cosets > config.coset_limit) {
    throw Error(ErrorCode::BudgetExceeded, "coset count exceeds the limit " + std::to_string(config.coset_limit));
  }
  if (!check_spec(v, query, CheckMode::exhaustive(), config).holds) {
    throw Error(ErrorCode::SeedViolatesQuery, "space does not satisfy " + query.to_string());
  }
  std::vector<Mat> out;
  const std::uint64_t lines = projective_count(f.order(), free.size());
  for (std::uint64_t r = 0; r < lines; ++r) {
    const Vec c = projective_point(f, free.size(), r);
    Mat m(f, v.n());
    for (std::size_t i = 0; i < free.size(); ++i) m.entries()[free[i]] = c[i];
    if (check_extension(v, m, query, config).holds) out.push_back(std::move(m));
  }
  return out;
}

std::optional<std::size_t> known_dimension_bound(std::size_t n, const Field& field, const SpectrumQuery& query) {
  const std::size_t c2 = n * (n - 1) / 2;
  const bool char2 = field.characteristic() == 2;
  if (!char2) {
    if (query.exclude_zero && query.bound == 1) return c2 + 1;
    if (!query.exclude_zero && query.bound == 2 && n >= 3) return c2 + 2;
    if (!query.exclude_zero && query.bound == 1) return c2 + 1;
    return std::nullopt;
  }
  if (field.order() == 2) return std::nullopt;
  if (query.exclude_zero && query.bound == 1) return c2 + 2;
  if (!query.exclude_zero && query.bound == 2) return n == 4 ? c2 + 4 : c2 + 3;
  return std::nullopt;
}

}  // namespace specspace
