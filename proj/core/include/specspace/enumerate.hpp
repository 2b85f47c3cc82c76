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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "specspace/gf.hpp"

namespace specspace {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// base^exp, or kSaturated on overflow.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

/// Number of 1-dimensional subspaces of GF(q)^n, or kSaturated.
inline std::uint64_t projective_count(std::uint64_t q, std::uint64_t n) {
  const std::uint64_t total = saturating_pow(q, n);
  if (total == kSaturated) return kSaturated;
  return (total - 1) / (q - 1);
}

/// |GL_n(q)|, or kSaturated.
inline std::uint64_t gl_order(std::uint64_t q, std::uint64_t n) {
  std::uint64_t r = 1;
  const std::uint64_t qn = saturating_pow(q, n);
  if (qn == kSaturated) return kSaturated;
  std::uint64_t qi = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t factor = qn - qi;
    if (r > kSaturated / factor) return kSaturated;
    r *= factor;
    qi *= q;
  }
  return r;
}

/// Digits of `index` in base q, most significant first.
inline void decode_digits(std::uint64_t index, std::uint64_t q, std::vector<std::uint32_t>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
}

/// Locates projective index r (0-based) among the normalized nonzero tuples of
/// length d, ordered lexicographically by element index: the leading nonzero
/// digit is 1, tuples whose leading digit sits further right come first.
/// Returns the leading position and the offset inside its block.
inline std::pair<std::size_t, std::uint64_t> projective_block(std::uint64_t r, std::uint64_t q, std::size_t d) {
  std::uint64_t block = 1;
  for (std::size_t tail = 0; tail < d; ++tail) {
    if (r < block) return {d - 1 - tail, r};
    r -= block;
    block *= q;
  }
  return {d, 0};
}

/// The r-th normalized representative of a point of P(GF(q)^d) (see
/// projective_block), as element indices.
inline std::vector<std::uint32_t> projective_digits(std::uint64_t r, std::uint64_t q, std::size_t d) {
  std::vector<std::uint32_t> digits(d, 0);
  auto [lead, offset] = projective_block(r, q, d);
  digits[lead] = 1;
  std::vector<std::uint32_t> tail(d - 1 - lead);
  decode_digits(offset, q, tail);
  std::copy(tail.begin(), tail.end(), digits.begin() + static_cast<std::ptrdiff_t>(lead) + 1);
  return digits;
}

inline std::vector<Fe> projective_point(const Field& f, std::size_t d, std::uint64_t r) {
  auto digits = projective_digits(r, f.order(), d);
  std::vector<Fe> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = f.element(digits[i]);
  return v;
}

/// Smallest index in [0, total) reported by `scan`, where scan(begin, end)
/// returns the first hit of its range. Chunks are handed out in increasing
/// order and workers stop once they pass the best hit, so the answer does not
/// depend on the thread count. `make_scan` is called once per worker.
template <class MakeScan>
std::optional<std::uint64_t> find_first(std::uint64_t total, unsigned threads, MakeScan make_scan,
                                        std::uint64_t chunk = 4096) {
  if (total == 0) return std::nullopt;
  threads = std::max(1u, threads);
  if (threads == 1 || total <= chunk) {
    auto scan = make_scan();
    return scan(std::uint64_t{0}, total);
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kSaturated};
  auto worker = [&]() {
    auto scan = make_scan();
    while (true) {
      const std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= total || begin >= best.load()) return;
      const std::uint64_t end = std::min(total, begin + chunk);
      if (auto hit = scan(begin, end)) {
        std::uint64_t cur = best.load();
        while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  const std::uint64_t b = best.load();
  if (b == kSaturated) return std::nullopt;
  return b;
}

/// Runs body(begin, end) over [0, total) in chunks on `threads` workers.
template <class MakeBody>
void parallel_for(std::uint64_t total, unsigned threads, MakeBody make_body, std::uint64_t chunk = 4096) {
  threads = std::max(1u, threads);
  if (threads == 1 || total <= chunk) {
    auto body = make_body();
    body(std::uint64_t{0}, total);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    auto body = make_body();
    while (true) {
      const std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= total) return;
      body(begin, std::min(total, begin + chunk));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace specspace
