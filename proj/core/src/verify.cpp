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

#include "specspace/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include <nlohmann/json.hpp>
#include "specspace/enumerate.hpp"
#include "specspace/families.hpp"
#include "specspace/probe.hpp"
#include "specspace/rng.hpp"
#include "specspace/search.hpp"

namespace specspace {

namespace {

using Subset = std::vector<std::size_t>;
using FD = FamilyDescriptor;

constexpr SpectrumQuery kOneStarClosure{1, Location::Closure, true};
constexpr SpectrumQuery kOneStarBase{1, Location::BaseField, true};
constexpr SpectrumQuery kTwoClosure{2, Location::Closure, false};
constexpr SpectrumQuery kTwoBase{2, Location::BaseField, false};
constexpr SpectrumQuery kOneClosure{1, Location::Closure, false};

std::size_t c2(std::size_t n) { return n * (n - 1) / 2; }

struct Outcome {
  ClaimStatus status = ClaimStatus::Verified;
  std::string reason;
  std::string scale;
  std::string detail;
  std::optional<Witness> witness;
};

Outcome refuted(std::string reason, Witness w) {
  Outcome o;
  o.status = ClaimStatus::Refuted;
  o.reason = std::move(reason);
  o.witness = std::move(w);
  return o;
}

Outcome skipped(std::string reason) {
  Outcome o;
  o.status = ClaimStatus::Skipped;
  o.reason = std::move(reason);
  return o;
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (auto x : xs) {
    if (!out.empty()) out += ",";
    out += std::to_string(x);
  }
  return out;
}

std::string set_text(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

/// Override handling: the default list, or the single override when the
/// predicate accepts it (empty otherwise).
template <class T, class Pred>
std::vector<T> pick(const std::optional<std::uint64_t>& over, std::vector<T> defaults, Pred ok) {
  if (!over) return defaults;
  const T v = static_cast<T>(*over);
  if (!ok(v)) return {};
  return {v};
}

bool valid_order(std::uint64_t q) {
  if (q < 2 || q > 1024) return false;
  std::uint64_t p = 2;
  while (q % p) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}
bool odd_order(std::uint64_t q) { return valid_order(q) && q % 2 == 1; }
bool even_order(std::uint64_t q) { return valid_order(q) && q % 2 == 0; }
bool char3_order(std::uint64_t q) { return valid_order(q) && q % 3 == 0; }

std::string scale_text(const std::vector<std::size_t>& ns, const std::vector<std::uint64_t>& qs,
                       const std::string& mode) {
  std::vector<std::uint64_t> n64(ns.begin(), ns.end());
  return "n=" + join(n64) + "; q=" + join(qs) + "; " + mode;
}

std::vector<Subset> subsets(std::size_t n, bool proper) {
  std::vector<Subset> out;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < top; ++mask) {
    if (proper && mask == top - 1) continue;
    Subset s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

/// All index sets for small n, a fixed spread of them above.
std::vector<Subset> index_sets(std::size_t n, bool proper, std::size_t all_up_to) {
  if (n <= all_up_to) return subsets(n, proper);
  std::vector<Subset> out{{1}, {n}, {1, n}, {1, 2}};
  if (!proper) {
    Subset all;
    for (std::size_t i = 1; i <= n; ++i) all.push_back(i);
    out.push_back(all);
  }
  return out;
}

std::vector<std::uint64_t> mat_indices(const Mat& m) {
  std::vector<std::uint64_t> out;
  for (auto e : m.entries()) out.push_back(e.v);
  return out;
}

std::vector<std::uint64_t> vec_indices(std::span<const Fe> v) {
  std::vector<std::uint64_t> out;
  for (auto e : v) out.push_back(e.v);
  return out;
}

Mat mat_from(const Field& f, std::size_t n, const std::vector<std::uint64_t>& idx) {
  if (idx.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "witness matrix has the wrong size");
  Mat m(f, n);
  for (std::size_t i = 0; i < idx.size(); ++i) m.entries()[i] = f.element(idx[i]);
  return m;
}

Vec vec_from(const Field& f, std::span<const std::uint64_t> idx) {
  Vec v;
  for (auto i : idx) v.push_back(f.element(i));
  return v;
}

Witness base_witness(std::string kind, const Field& f, std::size_t n) {
  Witness w;
  w.kind = std::move(kind);
  w.field = f.literal();
  w.n = n;
  return w;
}

Witness spec_witness(const MatSpace& v, const SpectrumQuery& q, bool expected, const std::optional<Mat>& member) {
  Witness w = base_witness("spec", v.field(), v.n());
  w.spaces.push_back(format_space(v));
  w.query = q.to_string();
  w.expected = expected;
  if (member) w.matrices.push_back(mat_indices(*member));
  return w;
}

Witness dim_witness(const MatSpace& v, std::size_t expected) {
  Witness w = base_witness("dim", v.field(), v.n());
  w.spaces.push_back(format_space(v));
  w.values = {expected};
  return w;
}

bool fits(const MatSpace& v, const ExecConfig& c) {
  return saturating_pow(v.field().order(), v.dim()) <= c.exhaustive_limit;
}

CheckResult exhaust(const MatSpace& v, const SpectrumQuery& q, const ExecConfig& c) {
  return check_spec(v, q, CheckMode::exhaustive(), c);
}

Mat unit(const Field& f, std::size_t n, std::size_t i, std::size_t j) { return Mat::unit(f, n, i - 1, j - 1); }

Fe tr_product(const Mat& a, const Mat& b) {
  const Field& f = a.field();
  const std::size_t n = a.n();
  Fe s{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s = f.add(s, f.mul(a.at(i, j), b.at(j, i)));
  return s;
}

bool is_nilpotent_poly(const Poly& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p.coeff(static_cast<std::size_t>(i)) != Fe{}) return false;
  return true;
}

bool upper_triangular(const Mat& m) {
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m.at(i, j) != Fe{}) return false;
  return true;
}

/// Position of the last nonzero coordinate, 1-based (0 for the zero vector).
std::size_t last_support(std::span<const Fe> x) {
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != Fe{}) return i + 1;
  return 0;
}

std::vector<std::size_t> image_profile_of(const MatSpace& v, const ExecConfig& config) {
  const std::uint64_t pts = projective_count(v.field().order(), v.n());
  if (pts > config.survey_limit) throw Error(ErrorCode::BudgetExceeded, "image survey over budget");
  std::vector<std::size_t> out;
  for (std::uint64_t r = 0; r < pts; ++r) out.push_back(image_dim(v, projective_point(v.field(), v.n(), r)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FD> exceptional_blocks(const Field& f) {
  std::vector<FD> out;
  for (std::uint64_t d = 0; d < f.order(); ++d) out.push_back(FD::fdelta(static_cast<std::int64_t>(d)));
  for (std::uint64_t d = 0; d < f.order(); ++d) out.push_back(FD::gdelta(static_cast<std::int64_t>(d)));
  return out;
}

// ---------------------------------------------------------------- bounds

Outcome bound_attained(const ClaimParams& p, bool two) {
  auto qs = pick<std::uint64_t>(p.q, {3, 5}, odd_order);
  auto ns = two ? pick<std::size_t>(p.n, {3, 4, 5, 6}, [](std::size_t n) { return n >= 3 && n <= 8; })
                : pick<std::size_t>(p.n, {2, 3, 4, 5, 6}, [](std::size_t n) { return n >= 2 && n <= 8; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  const SpectrumQuery query = two ? kTwoClosure : kOneStarClosure;
  std::size_t checked = 0;
  std::size_t dim_only = 0;
  std::uint64_t members = 0;
  std::string beyond;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (auto n : ns) {
      const std::size_t expected = c2(n) + (two ? 2 : 1);
      for (const auto& I : index_sets(n, two, 4)) {
        const MatSpace v = build(two ? FD::v2(n, I) : FD::v1star(n, I), f);
        if (v.dim() != expected) return refuted("dimension differs from the bound", dim_witness(v, expected));
        if (!fits(v, p.config)) {
          ++dim_only;
          const std::string tag = "n=" + std::to_string(n) + "/q=" + std::to_string(q);
          if (beyond.find(tag) == std::string::npos) beyond += (beyond.empty() ? "" : " ") + tag;
          continue;
        }
        const CheckResult r = exhaust(v, query, p.config);
        if (!r.holds) return refuted("family member violates " + query.to_string(), spec_witness(v, query, true, r.witness));
        ++checked;
        members += r.members_total;
      }
    }
  }
  Outcome o;
  o.scale = scale_text(ns, qs, "exhaustive");
  o.detail = std::to_string(checked) + " instances checked exhaustively (" + std::to_string(members) + " members)";
  if (dim_only) o.detail += "; " + std::to_string(dim_only) + " over budget, dimension only: " + beyond;
  return o;
}

Outcome maximality(const ClaimParams& p, bool two) {
  auto qs = pick<std::uint64_t>(p.q, {3}, odd_order);
  auto ns = pick<std::size_t>(p.n, {3}, [](std::size_t n) { return n >= 2 && n <= 4; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  const SpectrumQuery query = two ? kTwoBase : kOneStarBase;
  std::uint64_t cosets = 0;
  std::size_t spaces = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (auto n : ns) {
      std::vector<MatSpace> targets;
      if (two) {
        for (const auto& I : subsets(n, true)) targets.push_back(build(FD::v2(n, I), f));
      } else {
        targets.push_back(build(FD::v1star(n, {n}), f));
      }
      for (const auto& v : targets) {
        const CheckResult base = exhaust(v, query, p.config);
        if (!base.holds) return refuted("the family fails the query", spec_witness(v, query, true, base.witness));
        const auto free = complement_positions(v);
        const std::uint64_t total = saturating_pow(q, free.size());
        if (total - 1 > p.config.coset_limit) throw Error(ErrorCode::BudgetExceeded, "too many cosets");
        std::vector<std::uint32_t> digits(free.size());
        for (std::uint64_t idx = 1; idx < total; ++idx) {
          decode_digits(idx, q, digits);
          Mat m(f, n);
          for (std::size_t i = 0; i < free.size(); ++i) m.entries()[free[i]] = f.element(digits[i]);
          const CheckResult r = check_extension(v, m, query, p.config);
          if (r.holds || !r.witness) {
            return refuted("a one-step extension satisfies " + query.to_string(),
                           spec_witness(extend(v, m), query, false, std::nullopt));
          }
          ++cosets;
        }
        ++spaces;
      }
    }
  }
  Outcome o;
  o.scale = scale_text(ns, qs, "all nonzero cosets");
  o.detail = std::to_string(cosets) + " nonzero cosets each refuted with a witness member (" + std::to_string(spaces) +
             (spaces == 1 ? " space)" : " spaces)");
  return o;
}

// ---------------------------------------------------------------- char 2

Outcome char2_excess(const ClaimParams& p, bool two) {
  auto qs = pick<std::uint64_t>(p.q, {2, 4}, even_order);
  auto ns = pick<std::size_t>(p.n, {3, 4}, [](std::size_t n) { return n >= 3 && n <= 5; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  std::size_t checked = 0;
  std::uint64_t members = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (auto n : ns) {
      std::vector<std::pair<FD, std::size_t>> cases;
      if (two) {
        Subset all;
        for (std::size_t i = 1; i <= n - 2; ++i) all.push_back(i);
        cases.push_back({FD::vee(FD::sl(2), FD::v1star(n - 2, all)), c2(n) + 3});
        if (n == 4) cases.push_back({FD::vee(FD::sl(2), FD::sl(2)), c2(n) + 4});
      } else {
        cases.push_back({FD::vee(FD::sl(2), FD::nt(n - 2)), c2(n) + 2});
      }
      const SpectrumQuery query = two ? kTwoClosure : kOneStarClosure;
      for (const auto& [desc, expected] : cases) {
        const MatSpace v = build(desc, f);
        if (v.dim() != expected) return refuted(desc.to_string() + " has the wrong dimension", dim_witness(v, expected));
        if (!fits(v, p.config)) throw Error(ErrorCode::BudgetExceeded, desc.to_string() + " over budget");
        const CheckResult r = exhaust(v, query, p.config);
        if (!r.holds) return refuted(desc.to_string() + " violates " + query.to_string(), spec_witness(v, query, true, r.witness));
        ++checked;
        members += r.members_total;
      }
    }
  }
  Outcome o;
  o.scale = scale_text(ns, qs, "exhaustive");
  o.detail = std::to_string(checked) + " spaces above the odd-characteristic bound, " + std::to_string(members) +
             " members checked";
  return o;
}

Outcome gf2_everything(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {2}, [](std::uint64_t q) { return q == 2; });
  auto ns = pick<std::size_t>(p.n, {4}, [](std::size_t n) { return n >= 1 && n <= 6; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  const Field f = Field::prime(2);
  const std::size_t n = ns[0];
  const std::size_t max_dim = std::min<std::size_t>(n * n, 16);
  Rng rng(p.seed);
  std::uint64_t members = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + rng.below(max_dim);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < d; ++i) {
      Vec r(n * n);
      for (auto& e : r) e = f.element(rng.below(2));
      rows.push_back(r);
    }
    const MatSpace v(f, n, rows);
    const CheckResult r = exhaust(v, kTwoBase, p.config);
    if (!r.holds) return refuted("a subspace over GF(2) violates 2spec", spec_witness(v, kTwoBase, true, r.witness));
    members += r.members_total;
  }
  Outcome o;
  o.scale = scale_text(ns, qs, "100 random subspaces, exhaustive");
  o.detail = "100 random subspaces, " + std::to_string(members) + " members checked";
  return o;
}

// ---------------------------------------------------------------- trace lemma

struct Instance {
  std::string name;
  MatSpace v;
};

/// 2-spec instances in odd characteristic with at most 1e5 members.
std::vector<Instance> two_spec_instances(const Field& f, const std::vector<std::size_t>& ns, std::uint64_t seed,
                                         const ExecConfig& config) {
  std::vector<Instance> cand;
  const bool char3 = f.characteristic() == 3;
  for (auto n : ns) {
    for (const auto& I : index_sets(n, true, 3)) cand.push_back({FD::v2(n, I).to_string(), build(FD::v2(n, I), f)});
    for (const auto& I : index_sets(n, false, 3)) cand.push_back({FD::v1star(n, I).to_string(), build(FD::v1star(n, I), f)});
    cand.push_back({"nt:n=" + std::to_string(n), build(FD::nt(n), f)});
    if (n >= 2) cand.push_back({FD::loewy_radwan(n, 2).to_string(), build(FD::loewy_radwan(n, 2), f)});
    if (n == 4) {
      cand.push_back({"g4", build(FD::g4(), f)});
      cand.push_back({"g4p", build(FD::g4prime(), f)});
    }
    if (char3 && n == 3) {
      for (std::int64_t d = 0; d < 3; ++d) {
        cand.push_back({FD::fdelta(d).to_string(), build(FD::fdelta(d), f)});
        cand.push_back({FD::gdelta(d).to_string(), build(FD::gdelta(d), f)});
      }
    }
    if (char3 && n >= 4) {
      for (std::size_t pp = 0; pp + 3 <= n; ++pp) {
        const FD w = FD::w2(n, pp, FD::fdelta(0));
        cand.push_back({w.to_string(), build(w, f)});
      }
    }
    // Random low-dimensional subspaces; the 2-spec ones are kept below.
    Rng rng(seed ^ (n * 0x9e3779b97f4a7c15ULL));
    for (int t = 0; t < 40; ++t) {
      const std::size_t d = 2 + rng.below(3);
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < d; ++i) {
        Vec r(n * n);
        for (std::size_t k = 0; k < r.size(); ++k) {
          // sparse draws hit rank-1 members more often
          if (rng.below(3) == 0) r[k] = f.element(rng.below(f.order()));
        }
        rows.push_back(r);
      }
      cand.push_back({"random#" + std::to_string(t) + ":n=" + std::to_string(n), MatSpace(f, n, rows)});
    }
  }
  std::vector<Instance> out;
  for (auto& c : cand) {
    if (saturating_pow(f.order(), c.v.dim()) > std::min<std::uint64_t>(100'000, config.exhaustive_limit)) continue;
    if (!exhaust(c.v, kTwoBase, config).holds) continue;
    out.push_back(std::move(c));
  }
  return out;
}

/// Nonzero rank <= 1 trace 0 members, one per line.
std::vector<Mat> rank1_trace0(const MatSpace& v) {
  std::vector<Mat> out;
  MemberCursor cur(v, true);
  if (cur.size() == 0) return out;
  cur.seek(0);
  do {
    if (cur.index() == 0) continue;
    Mat m = cur.matrix();
    if (m.trace() == Fe{} && m.rank() <= 1) out.push_back(std::move(m));
  } while (cur.next());
  return out;
}

Outcome trace_claims(const ClaimParams& p, bool corollary) {
  auto qs = pick<std::uint64_t>(p.q, {3, 5}, odd_order);
  auto ns = pick<std::size_t>(p.n, {3, 4}, [](std::size_t n) { return n >= 3 && n <= 5; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  std::size_t spaces = 0;
  std::uint64_t pairs = 0;
  std::size_t max_span = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (const auto& inst : two_spec_instances(f, ns, p.seed, p.config)) {
      const auto mats = rank1_trace0(inst.v);
      ++spaces;
      if (corollary) {
        std::vector<Vec> rows;
        for (const auto& m : mats) rows.emplace_back(m.entries().begin(), m.entries().end());
        const std::size_t d = linalg::rank(f, rows);
        max_span = std::max(max_span, d);
        if (2 * d > inst.v.n() * inst.v.n()) {
          Witness w = base_witness("span-bound", f, inst.v.n());
          w.spaces.push_back(format_space(inst.v));
          w.values = {d};
          return refuted(inst.name + ": rank-1 trace-0 span exceeds n^2/2", w);
        }
        continue;
      }
      for (std::size_t i = 0; i < mats.size(); ++i) {
        for (std::size_t j = i; j < mats.size(); ++j) {
          ++pairs;
          if (tr_product(mats[i], mats[j]) != Fe{}) {
            Witness w = base_witness("trace-pair", f, inst.v.n());
            w.spaces.push_back(format_space(inst.v));
            w.matrices = {mat_indices(mats[i]), mat_indices(mats[j])};
            return refuted(inst.name + ": tr(AB) != 0", w);
          }
        }
      }
    }
  }
  Outcome o;
  o.scale = scale_text(ns, qs, "exhaustive, spaces with at most 1e5 members");
  if (corollary) {
    o.detail = std::to_string(spaces) + " 2-spec spaces; largest rank-1 trace-0 span " + std::to_string(max_span);
  } else {
    o.detail = std::to_string(spaces) + " 2-spec spaces, " + std::to_string(pairs) + " pairs of rank-1 trace-0 lines";
  }
  return o;
}

// ---------------------------------------------------------------- covering

/// x lies in E_{i,lambda} (1-based i) or, for i == 0, in H.
bool in_cover_piece(const Field& f, std::span<const Fe> x, std::size_t i, Fe lambda) {
  if (i == 0) return x[0] == Fe{};
  for (std::size_t k = 1; k < i; ++k)
    if (x[k] != x[0]) return false;
  return x[i] == f.mul(lambda, x[i - 1]);
}

bool covered(const Field& f, std::span<const Fe> x) {
  const std::size_t n = x.size();
  if (in_cover_piece(f, x, 0, Fe{})) return true;
  for (std::size_t i = 1; i < n; ++i)
    for (std::uint64_t l = 0; l < f.order(); ++l) {
      const Fe lambda = f.element(l);
      if (lambda == f.one()) continue;
      if (in_cover_piece(f, x, i, lambda)) return true;
    }
  return false;
}

bool constant_nonzero(std::span<const Fe> x) {
  return x[0] != Fe{} && std::all_of(x.begin(), x.end(), [&](Fe e) { return e == x[0]; });
}

Outcome covering(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3, 4}, valid_order);
  auto ns = pick<std::size_t>(p.n, {3, 4}, [](std::size_t n) { return n >= 2 && n <= 8; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  std::string counts;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (auto n : ns) {
      const std::uint64_t total = saturating_pow(q, n);
      if (total > p.config.exhaustive_limit) throw Error(ErrorCode::BudgetExceeded, "K^n over budget");
      // Piece sizes: E_{i,lambda} must have q^(n-i) vectors, H q^(n-1).
      std::vector<std::size_t> per_dim(n, 0);
      std::vector<std::uint32_t> digits(n);
      auto piece_size = [&](std::size_t i, Fe lambda) {
        std::uint64_t c = 0;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          decode_digits(idx, q, digits);
          const Vec x = [&] { Vec v; for (auto d : digits) v.push_back(f.element(d)); return v; }();
          if (in_cover_piece(f, x, i, lambda)) ++c;
        }
        return c;
      };
      const std::uint64_t h = piece_size(0, Fe{});
      if (h != saturating_pow(q, n - 1)) throw Error(ErrorCode::BadParameters, "H has the wrong size");
      ++per_dim[n - 1];
      for (std::size_t i = 1; i < n; ++i)
        for (std::uint64_t l = 0; l < q; ++l) {
          if (f.element(l) == f.one()) continue;
          if (piece_size(i, f.element(l)) != saturating_pow(q, n - i)) {
            throw Error(ErrorCode::BadParameters, "E_{i,lambda} has the wrong size");
          }
          ++per_dim[n - i];
        }
      // (n-1)(q-1)+1 pieces: q of dimension n-1, q-1 of each smaller dimension.
      for (std::size_t d = 1; d < n; ++d) {
        const std::size_t want = d == n - 1 ? q : q - 1;
        if (per_dim[d] != want) throw Error(ErrorCode::BadParameters, "unexpected piece count");
      }
      std::uint64_t uncovered = 0;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        decode_digits(idx, q, digits);
        Vec x;
        for (auto d : digits) x.push_back(f.element(d));
        const bool c = covered(f, x);
        if (!c) ++uncovered;
        if (c == constant_nonzero(x)) {
          Witness w = base_witness("cover", f, n);
          w.values = vec_indices(x);
          w.expected = !c;
          return refuted("covering status differs from the constant-vector description", w);
        }
      }
      if (uncovered != q - 1) throw Error(ErrorCode::BadParameters, "uncovered count mismatch");
      counts += (counts.empty() ? "" : ", ") + std::string("q=") + std::to_string(q) + "/n=" + std::to_string(n) +
                ": uncovered " + std::to_string(uncovered) + " = q-1";
    }
  }
  Outcome o;
  o.scale = scale_text(ns, qs, "all vectors of K^n");
  o.detail = counts;
  return o;
}

// ---------------------------------------------------------------- good vectors

Outcome good_vectors(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3, 5, 4}, valid_order);
  auto ns = pick<std::size_t>(p.n, {2, 3, 4}, [](std::size_t n) { return n >= 2 && n <= 5; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  std::size_t instances = 0;
  std::size_t char2_checked = 0;
  std::uint64_t min_good = kSaturated;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    if (q % 2 == 0) {
      // sl_2 and its padding {0} v sl_2 have no good vector.
      for (auto n : ns) {
        const MatSpace v = n == 2 ? build(FD::sl(2), f) : vee(MatSpace(f, n - 2), build(FD::sl(2), f));
        const auto survey = good_vector_survey(v, p.config);
        const auto good = std::count_if(survey.begin(), survey.end(), [](const auto& r) { return r.is_good; });
        if (good != 0) {
          Witness w = base_witness("good-vector", f, n);
          w.spaces.push_back(format_space(v));
          w.expected = false;
          return refuted("char-2 example has a good vector", w);
        }
        ++char2_checked;
      }
      continue;
    }
    std::vector<Instance> cand;
    const bool char3 = f.characteristic() == 3;
    for (auto n : ns) {
      for (const auto& I : index_sets(n, false, 3)) cand.push_back({FD::v1star(n, I).to_string(), build(FD::v1star(n, I), f)});
      for (const auto& I : index_sets(n, true, 3)) cand.push_back({FD::v2(n, I).to_string(), build(FD::v2(n, I), f)});
      cand.push_back({FD::loewy_radwan(n, 2).to_string(), build(FD::loewy_radwan(n, 2), f)});
      if (n == 4 && q == 3) {
        cand.push_back({"g4", build(FD::g4(), f)});
        cand.push_back({"g4p", build(FD::g4prime(), f)});
      }
      if (char3 && n == 3)
        for (const auto& b : exceptional_blocks(f)) cand.push_back({b.to_string(), build(b, f)});
      if (char3 && n >= 4 && q == 3)
        for (std::size_t pp = 0; pp + 3 <= n; ++pp) {
          cand.push_back({FD::w2(n, pp, FD::gdelta(1)).to_string(), build(FD::w2(n, pp, FD::gdelta(1)), f)});
          cand.push_back({FD::w1star(n, pp, FD::fdelta(0)).to_string(), build(FD::w1star(n, pp, FD::fdelta(0)), f)});
        }
    }
    for (const auto& c : cand) {
      if (!fits(c.v, p.config)) continue;
      const std::size_t n = c.v.n();
      const bool qualifies = (n >= 3 && exhaust(c.v, kTwoBase, p.config).holds) || exhaust(c.v, kOneStarBase, p.config).holds;
      if (!qualifies) continue;
      const auto survey = good_vector_survey(c.v, p.config);
      const auto good = static_cast<std::uint64_t>(std::count_if(survey.begin(), survey.end(), [](const auto& r) { return r.is_good; }));
      if (good == 0) {
        Witness w = base_witness("good-vector", f, n);
        w.spaces.push_back(format_space(c.v));
        w.expected = true;
        return refuted(c.name + " has no good vector", w);
      }
      min_good = std::min(min_good, good);
      ++instances;
    }
  }
  Outcome o;
  o.scale = scale_text(ns, qs, "full projective survey");
  o.detail = std::to_string(instances) + " qualifying instances each with a good point";
  if (instances) o.detail += " (fewest: " + std::to_string(min_good) + ")";
  if (char2_checked) o.detail += "; " + std::to_string(char2_checked) + " char-2 sl_2 examples with no good point";
  return o;
}

// ---------------------------------------------------------------- uniqueness

Outcome uniqueness(const ClaimParams& p, bool two) {
  std::vector<std::pair<std::size_t, std::uint64_t>> scales{{2, 3}, {3, 2}, {3, 3}};
  std::vector<std::pair<std::size_t, std::uint64_t>> chosen;
  for (auto [n, q] : scales) {
    if (p.n && *p.n != n) continue;
    if (p.q && *p.q != q) continue;
    chosen.push_back({n, q});
  }
  if (chosen.empty() && (p.n || p.q)) {
    const std::size_t n = p.n.value_or(3);
    const std::uint64_t q = p.q.value_or(3);
    if (!valid_order(q) || n < 2 || n > 4) return skipped("override outside the claim's domain");
    chosen.push_back({n, q});
  }
  std::uint64_t pairs = 0;
  std::uint64_t similar = 0;
  std::string scale;
  for (auto [n, q] : chosen) {
    const Field f = Field::of_order(q);
    if (gl_order(q, n) > p.config.gl_limit) throw Error(ErrorCode::BudgetExceeded, "GL_n(q) over budget");
    const auto sets = subsets(n, two);
    std::vector<MatSpace> spaces;
    for (const auto& I : sets) spaces.push_back(build(two ? FD::v2(n, I) : FD::v1star(n, I), f));
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t b = 0; b < sets.size(); ++b) {
        Subset comp;
        for (std::size_t i = 1; i <= n; ++i)
          if (!std::binary_search(sets[b].begin(), sets[b].end(), i)) comp.push_back(i);
        const bool expected = sets[a] == sets[b] || (two && sets[a] == comp);
        const auto hit = similar_brute(spaces[a], spaces[b], p.config);
        ++pairs;
        if (hit) ++similar;
        if (hit.has_value() != expected || (hit && !similar_witness(spaces[a], spaces[b], *hit))) {
          Witness w = base_witness(hit ? "similar" : "not-similar", f, n);
          w.spaces = {format_space(spaces[a]), format_space(spaces[b])};
          if (hit) w.matrices.push_back(mat_indices(*hit));
          w.expected = expected;
          w.note = set_text(sets[a]) + " vs " + set_text(sets[b]);
          return refuted("similarity of " + w.note + " disagrees with the index-set rule", w);
        }
      }
    }
    scale += (scale.empty() ? "" : ", ") + std::string("(n=") + std::to_string(n) + ",q=" + std::to_string(q) +
             ", |GL|=" + std::to_string(gl_order(q, n)) + ")";
  }
  Outcome o;
  o.scale = scale + "; full GL scan";
  o.detail = std::to_string(pairs) + " ordered pairs, " + std::to_string(similar) + " similar, all as predicted";
  return o;
}

Witness profile_witness(const MatSpace& a, const MatSpace& b, const std::string& what) {
  Witness w = base_witness("profile", a.field(), a.n());
  w.spaces = {format_space(a), format_space(b)};
  w.note = what;
  return w;
}

Outcome g4_separation(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3}, odd_order);
  if (qs.empty() || (p.n && *p.n != 4)) return skipped("override outside the claim's domain");
  const Field f = Field::of_order(qs[0]);
  const MatSpace g4 = build(FD::g4(), f);
  const MatSpace g4p = build(FD::g4prime(), f);
  const auto pg4 = invariant_battery(g4, p.config);
  const auto pg4p = invariant_battery(g4p, p.config);
  auto why = distinguishing_invariant(pg4, pg4p);
  if (!why) return refuted("G4 and G4' share every invariant", profile_witness(g4, g4p, "all"));
  std::string detail = "G4/G4' by " + *why;
  std::vector<MatSpace> vs;
  std::vector<InvariantProfile> pv;
  const auto sets = subsets(4, true);
  std::map<std::string, int> used;
  for (const auto& I : sets) {
    vs.push_back(build(FD::v2(4, I), f));
    pv.push_back(invariant_battery(vs.back(), p.config));
    for (const auto* g : {&pg4, &pg4p}) {
      auto d = distinguishing_invariant(*g, pv.back());
      if (!d) return refuted("G4 family and " + set_text(I) + " share every invariant", profile_witness(g == &pg4 ? g4 : g4p, vs.back(), "all"));
      ++used[*d];
    }
  }
  std::size_t distinct_pairs = 0;
  std::size_t separated = 0;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (vs[a] == vs[b]) continue;
      ++distinct_pairs;
      if (distinguishing_invariant(pv[a], pv[b])) ++separated;
    }
  for (const auto& [k, c] : used) detail += "; G4-type vs V_I by " + k + " x" + std::to_string(c);
  detail += "; observed: " + std::to_string(separated) + " of " + std::to_string(distinct_pairs) +
            " distinct V_I pairs separated by the battery (not asserted)";
  Outcome o;
  o.scale = scale_text({4}, qs, "invariant battery");
  o.detail = detail;
  return o;
}

Outcome w_family_images(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3}, char3_order);
  auto ns = pick<std::size_t>(p.n, {5, 6}, [](std::size_t n) { return n >= 4 && n <= 7; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  std::size_t comparisons = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (auto n : ns) {
      struct Entry {
        std::size_t p;
        MatSpace v;
        std::vector<std::size_t> prof;
      };
      std::vector<Entry> ws;
      for (std::size_t pp = 0; pp + 3 <= n; ++pp)
        for (const auto& b : exceptional_blocks(f)) {
          MatSpace v = build(FD::w2(n, pp, b), f);
          auto prof = image_profile_of(v, p.config);
          ws.push_back({pp, std::move(v), std::move(prof)});
        }
      for (const auto& I : subsets(n, true)) {
        const MatSpace v = build(FD::v2(n, I), f);
        const auto prof = image_profile_of(v, p.config);
        for (const auto& w : ws) {
          ++comparisons;
          if (w.prof == prof) return refuted("W and V_I share the image profile", profile_witness(w.v, v, "image_profile"));
        }
      }
      for (std::size_t a = 0; a < ws.size(); ++a)
        for (std::size_t b = a + 1; b < ws.size(); ++b) {
          if (ws[a].p == ws[b].p) continue;
          ++comparisons;
          if (ws[a].prof == ws[b].prof) {
            return refuted("W spaces with different p share the image profile", profile_witness(ws[a].v, ws[b].v, "image_profile"));
          }
        }
    }
  }
  Outcome o;
  o.scale = scale_text(ns, qs, "all projective points");
  o.detail = std::to_string(comparisons) + " profile comparisons, all distinct";
  return o;
}

Witness image_witness(const MatSpace& v, std::span<const Fe> x, std::size_t lo, std::size_t hi, std::string note) {
  Witness w = base_witness("image", v.field(), v.n());
  w.spaces.push_back(format_space(v));
  w.values = vec_indices(x);
  w.values.push_back(lo);
  w.values.push_back(hi);
  w.note = std::move(note);
  return w;
}

Outcome transitivity(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3}, char3_order);
  auto ns = pick<std::size_t>(p.n, {3, 4, 5, 6}, [](std::size_t n) { return n >= 3 && n <= 7; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  std::uint64_t points = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (auto n : ns) {
      const std::uint64_t pts = projective_count(q, n);
      if (pts > p.config.survey_limit) throw Error(ErrorCode::BudgetExceeded, "projective survey over budget");
      auto scan = [&](const MatSpace& v, auto bounds, const std::string& part) -> std::optional<Outcome> {
        for (std::uint64_t r = 0; r < pts; ++r) {
          const Vec x = projective_point(f, n, r);
          const auto [lo, hi] = bounds(last_support(x));
          const std::size_t d = image_dim(v, x);
          ++points;
          if (d < lo || d > hi) return refuted("part " + part + " fails", image_witness(v, x, lo, hi, part));
        }
        return std::nullopt;
      };
      for (const auto& I : subsets(n, true)) {
        auto res = scan(build(FD::v2(n, I), f), [](std::size_t k) { return std::pair<std::size_t, std::size_t>{0, k}; }, "a");
        if (res) return *res;
      }
      for (std::size_t pp = 0; pp + 3 <= n; ++pp)
        for (const auto& b : exceptional_blocks(f)) {
          auto bounds = [pp, n](std::size_t k) -> std::pair<std::size_t, std::size_t> {
            if (k <= pp) return {0, k};
            if (k <= pp + 3) return {pp + 2, pp + 3};
            return {pp + 4, n};
          };
          auto res = scan(build(FD::w2(n, pp, b), f), bounds, "b");
          if (res) return *res;
        }
      if (n == 6) {
        for (const auto& a : exceptional_blocks(f))
          for (const auto& b : exceptional_blocks(f)) {
            auto bounds = [](std::size_t k) -> std::pair<std::size_t, std::size_t> {
              if (k <= 3) return {0, 3};
              return {5, 6};
            };
            auto res = scan(build(FD::vee(a, b), f), bounds, "c");
            if (res) return *res;
          }
      }
    }
  }
  Outcome o;
  o.scale = scale_text(ns, qs, "all projective points");
  o.detail = std::to_string(points) + " (space, point) image dimensions within their bounds";
  return o;
}

Outcome normalizer(const ClaimParams& p) {
  std::vector<std::pair<std::size_t, std::uint64_t>> scales{{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  std::vector<std::pair<std::size_t, std::uint64_t>> chosen;
  for (auto [n, q] : scales)
    if ((!p.n || *p.n == n) && (!p.q || *p.q == q)) chosen.push_back({n, q});
  if (chosen.empty()) {
    const std::size_t n = p.n.value_or(2);
    const std::uint64_t q = p.q.value_or(3);
    if (!valid_order(q) || n < 1 || n > 4) return skipped("override outside the claim's domain");
    chosen.push_back({n, q});
  }
  std::string detail;
  for (auto [n, q] : chosen) {
    if (gl_order(q, n) > p.config.gl_limit) throw Error(ErrorCode::BudgetExceeded, "GL_n(q) over budget");
    const Field f = Field::of_order(q);
    std::uint64_t normalizing = 0;
    std::optional<Mat> bad;
    const std::uint64_t total = for_each_invertible(f, n, [&](const Mat& m) {
      const bool nc = normalizer_check(m);
      if (nc != upper_triangular(m)) {
        bad = m;
        return false;
      }
      if (nc) ++normalizing;
      return true;
    });
    if (bad) {
      Witness w = base_witness("normalizer", f, n);
      w.matrices.push_back(mat_indices(*bad));
      return refuted("normalizer membership differs from upper-triangularity", w);
    }
    const std::uint64_t borel = saturating_pow(q - 1, n) * saturating_pow(q, c2(n));
    if (normalizing != borel) throw Error(ErrorCode::BadParameters, "normalizer count mismatch");
    detail += (detail.empty() ? "" : ", ") + std::string("(n=") + std::to_string(n) + ",q=" + std::to_string(q) + ") " +
              std::to_string(normalizing) + " of " + std::to_string(total);
  }
  Outcome o;
  std::vector<std::size_t> ns;
  std::vector<std::uint64_t> qs;
  for (auto [n, q] : chosen) {
    ns.push_back(n);
    qs.push_back(q);
  }
  o.scale = scale_text(ns, qs, "full GL scan");
  o.detail = "normalizing matrices = invertible upper-triangular: " + detail;
  return o;
}

// ---------------------------------------------------------------- small lemmas

bool two_by_two_holds(const Field& f, Fe a, Fe b, Fe c, const ExecConfig& config) {
  Mat m(f, 2);
  m.set(0, 0, a);
  m.set(1, 0, b);
  m.set(1, 1, c);
  const Mat mats[] = {m, Mat::unit(f, 2, 0, 1)};
  return exhaust(MatSpace::from_matrices(mats), kOneStarClosure, config).holds;
}

bool two_by_two_predicted(Fe a, Fe b, Fe c) { return b == Fe{} && (a == c || a == Fe{} || c == Fe{}); }

Outcome lemma_2x2(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3, 5}, odd_order);
  if (qs.empty() || (p.n && *p.n != 2)) return skipped("override outside the claim's domain");
  std::uint64_t tuples = 0;
  std::uint64_t holding = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (std::uint64_t ia = 0; ia < q; ++ia)
      for (std::uint64_t ib = 0; ib < q; ++ib)
        for (std::uint64_t ic = 0; ic < q; ++ic) {
          const Fe a = f.element(ia), b = f.element(ib), c = f.element(ic);
          const bool holds = two_by_two_holds(f, a, b, c, p.config);
          ++tuples;
          if (holds) ++holding;
          if (holds != two_by_two_predicted(a, b, c)) {
            Witness w = base_witness("two-by-two", f, 2);
            w.values = {ia, ib, ic};
            w.expected = two_by_two_predicted(a, b, c);
            return refuted("spectral verdict differs from the (a,b,c) rule", w);
          }
        }
  }
  Outcome o;
  o.scale = scale_text({2}, qs, "exhaustive over (a,b,c)");
  o.detail = std::to_string(tuples) + " tuples, " + std::to_string(holding) + " spans satisfy 1star-closure, all as predicted";
  return o;
}

Outcome n2_classification(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3, 5}, odd_order);
  if (qs.empty() || (p.n && *p.n != 2)) return skipped("override outside the claim's domain");
  std::size_t planes = 0;
  std::size_t qualifying = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    const MatSpace models[] = {build(FD::v1star(2, {1, 2}), f), build(FD::v1star(2, {1}), f), build(FD::v1star(2, {2}), f)};
    const std::uint64_t pts = projective_count(q, 4);
    std::set<std::vector<Vec>> seen;
    for (std::uint64_t r1 = 0; r1 < pts; ++r1)
      for (std::uint64_t r2 = r1 + 1; r2 < pts; ++r2) {
        const MatSpace v(f, 2, {projective_point(f, 4, r1), projective_point(f, 4, r2)});
        if (!seen.insert(v.rows()).second) continue;
        ++planes;
        if (!exhaust(v, kOneStarClosure, p.config).holds) continue;
        ++qualifying;
        bool found = false;
        for (const auto& m : models)
          if (similar_brute(v, m, p.config)) {
            found = true;
            break;
          }
        if (!found) {
          Witness w = base_witness("not-similar", f, 2);
          w.spaces.push_back(format_space(v));
          for (const auto& m : models) w.spaces.push_back(format_space(m));
          w.expected = true;
          return refuted("a 2-dimensional 1star-closure plane matches none of the three models", w);
        }
      }
  }
  Outcome o;
  o.scale = scale_text({2}, qs, "all planes of M_2, full GL scan");
  o.detail = std::to_string(planes) + " planes, " + std::to_string(qualifying) +
             " satisfy 1star-closure, each similar to one of the three diagonal models";
  return o;
}

/// Nonzero eigenvalues in K of every member of v, with the member's coordinates.
struct MemberEigs {
  std::vector<std::uint32_t> coords;
  std::vector<Fe> eigs;
};

std::vector<MemberEigs> member_eigs(const MatSpace& v) {
  const Field& f = v.field();
  std::vector<MemberEigs> out;
  MemberCursor cur(v, false);
  cur.seek(0);
  do {
    const Poly cp = cur.matrix().charpoly();
    MemberEigs m{cur.digits(), {}};
    for (std::uint64_t e = 1; e < f.order(); ++e)
      if (cp.eval(f.element(e)) == Fe{}) m.eigs.push_back(f.element(e));
    out.push_back(std::move(m));
  } while (cur.next());
  return out;
}

bool linear_form_hypothesis(const Field& f, const std::vector<MemberEigs>& members, std::span<const Fe> phi) {
  for (const auto& m : members) {
    if (m.eigs.empty()) continue;
    Fe val{};
    for (std::size_t i = 0; i < phi.size(); ++i) val = f.add(val, f.mul(phi[i], f.element(m.coords[i])));
    for (auto l : m.eigs)
      if (val != Fe{} && val != l) return false;
  }
  return true;
}

Vec diagonal_form(const MatSpace& v, std::size_t i0) {
  Vec phi;
  for (std::size_t k = 0; k < v.dim(); ++k) phi.push_back(v.basis(k).at(i0, i0));
  return phi;
}

Outcome linear_form(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3}, [](std::uint64_t q) { return valid_order(q) && q > 2; });
  auto ns = pick<std::size_t>(p.n, {3}, [](std::size_t n) { return n >= 1 && n <= 4; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  std::uint64_t forms = 0;
  std::size_t sets = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (auto n : ns) {
      for (const auto& I : subsets(n, false)) {
        const MatSpace v = build(FD::v1star(n, I), f);
        const std::uint64_t count = saturating_pow(q, v.dim());
        if (count * count > p.config.exhaustive_limit) throw Error(ErrorCode::BudgetExceeded, "forms x members over budget");
        const auto members = member_eigs(v);
        const Vec diag = diagonal_form(v, I[0] - 1);
        std::vector<std::uint32_t> digits(v.dim());
        for (std::uint64_t idx = 0; idx < count; ++idx) {
          decode_digits(idx, q, digits);
          Vec phi;
          for (auto d : digits) phi.push_back(f.element(d));
          const bool zero = std::all_of(phi.begin(), phi.end(), [](Fe e) { return e == Fe{}; });
          const bool predicted = zero || phi == diag;
          ++forms;
          if (linear_form_hypothesis(f, members, phi) != predicted) {
            Witness w = base_witness("linear-form", f, n);
            w.spaces.push_back(format_space(v));
            w.values = vec_indices(phi);
            w.values.push_back(I[0]);
            w.expected = predicted;
            return refuted("form on " + set_text(I) + " contradicts the zero-or-diagonal rule", w);
          }
        }
        ++sets;
      }
    }
  }
  Outcome o;
  o.scale = scale_text(ns, qs, "all linear forms, all members");
  o.detail = std::to_string(sets) + " index sets, " + std::to_string(forms) +
             " forms; the hypothesis holds exactly for 0 and the diagonal form";
  return o;
}

/// Every M_{L,C} (p = 1) has at most two eigenvalues in the closure.
bool albc_hypothesis(const Field& f, Fe lambda, Fe mu, Fe fc, Fe gc) {
  Mat m(f, 3);
  for (std::uint64_t il = 0; il < f.order(); ++il)
    for (std::uint64_t ic = 0; ic < f.order(); ++ic) {
      const Fe L = f.element(il), C = f.element(ic);
      m.set(0, 1, L);
      m.set(1, 0, f.mul(mu, C));
      m.set(1, 2, C);
      m.set(2, 0, f.add(f.mul(fc, L), f.mul(gc, C)));
      m.set(2, 1, f.mul(lambda, L));
      if (count_roots_in_closure(m.charpoly()) > 2) return false;
    }
  return true;
}

bool albc_conclusion(const Field& f, Fe lambda, Fe mu, Fe fc, Fe gc) {
  if (f.add(lambda, mu) != Fe{}) return false;
  if (f.characteristic() != 3 && (fc != Fe{} || gc != Fe{})) return false;
  return true;
}

Outcome lemma_albc(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {5, 7}, odd_order);
  if (qs.empty() || (p.n && *p.n != 3)) return skipped("override outside the claim's domain");
  std::uint64_t tuples = 0;
  std::uint64_t hyp = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    if (saturating_pow(q, 6) > p.config.exhaustive_limit * 10) throw Error(ErrorCode::BudgetExceeded, "tuple scan over budget");
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b)
        for (std::uint64_t c = 0; c < q; ++c)
          for (std::uint64_t d = 0; d < q; ++d) {
            const Fe l = f.element(a), m = f.element(b), fc = f.element(c), gc = f.element(d);
            ++tuples;
            if (!albc_hypothesis(f, l, m, fc, gc)) continue;
            ++hyp;
            if (!albc_conclusion(f, l, m, fc, gc)) {
              Witness w = base_witness("albc", f, 3);
              w.values = {a, b, c, d};
              return refuted("hypothesis holds but the conclusion fails", w);
            }
          }
  }
  Outcome o;
  o.scale = scale_text({3}, qs, "p=1, exhaustive over (lambda,mu,f,g) and (L,C)");
  o.detail = std::to_string(tuples) + " tuples, " + std::to_string(hyp) +
             " satisfy the hypothesis; lambda+mu=0 for all (and f=g=0 outside characteristic 3)";
  return o;
}

struct Albc3 {
  Mat a, b, d;
};

Albc3 albc3_mats(const Field& f, Fe a, Fe b, Fe c, const std::uint32_t dd[3]) {
  Albc3 m{Mat(f, 3), Mat(f, 3), Mat(f, 3)};
  m.a.set(0, 1, f.one());
  m.a.set(2, 0, a);
  m.b.set(1, 2, f.one());
  m.b.set(2, 0, b);
  for (std::size_t i = 0; i < 3; ++i) m.d.set(i, i, dd[i] ? f.one() : f.zero());
  m.d.set(2, 0, c);
  return m;
}

/// Closure roots of p lie in {0, 1}: the radical divides t^2 - t.
bool roots_in_01(const Poly& p) {
  const Field& f = p.field();
  const Poly t2t = Poly::from_ints(f, {0, -1, 1});
  return (t2t % squarefree_part(p)).is_zero();
}

bool albc3_hyp_a(const Field& f, const Albc3& m, const std::uint32_t dd[3], const ExecConfig& config) {
  const bool all0 = !dd[0] && !dd[1] && !dd[2];
  const bool all1 = dd[0] && dd[1] && dd[2];
  if (all0 || all1) return false;
  const Mat mats[] = {m.a, m.b, m.d};
  return exhaust(MatSpace::from_matrices(f, 3, mats), kTwoClosure, config).holds;
}

bool albc3_hyp_b(const Field& f, const Albc3& m) {
  for (std::uint64_t x = 0; x < f.order(); ++x)
    for (std::uint64_t y = 0; y < f.order(); ++y) {
      const Mat s = m.d + m.a.scaled(f.element(x)) + m.b.scaled(f.element(y));
      if (!roots_in_01(s.charpoly())) return false;
    }
  return true;
}

Outcome char3_albc(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3, 9}, char3_order);
  if (qs.empty() || (p.n && *p.n != 3)) return skipped("override outside the claim's domain");
  std::uint64_t tuples = 0, ha = 0, hb = 0;
  std::optional<Witness> first;
  std::string failures;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    std::uint64_t bad_a = 0, bad_b = 0;
    for (std::uint64_t ia = 0; ia < q; ++ia)
      for (std::uint64_t ib = 0; ib < q; ++ib)
        for (std::uint64_t ic = 0; ic < q; ++ic)
          for (std::uint32_t mask = 0; mask < 8; ++mask) {
            const std::uint32_t dd[3] = {mask >> 2 & 1, mask >> 1 & 1, mask & 1};
            const Albc3 m = albc3_mats(f, f.element(ia), f.element(ib), f.element(ic), dd);
            ++tuples;
            const bool a = albc3_hyp_a(f, m, dd, p.config);
            const bool b = albc3_hyp_b(f, m);
            ha += a;
            hb += b;
            if (!(a || b) || !(ia || ib || ic)) continue;
            bad_a += a;
            bad_b += b;
            if (!first) {
              first = base_witness("albc3", f, 3);
              first->values = {ia, ib, ic, dd[0], dd[1], dd[2]};
              first->note = a ? "a" : "b";
            }
          }
    if (bad_a || bad_b) {
      failures += (failures.empty() ? "" : "; ") + f.literal() + ": " + std::to_string(bad_a) + " tuples violate (a), " +
                  std::to_string(bad_b) + " violate (b)";
    }
  }
  const std::string counts = std::to_string(tuples) + " tuples; hypothesis (a) held " + std::to_string(ha) +
                             " times, (b) " + std::to_string(hb) + " times";
  Outcome o;
  if (first) {
    o = refuted("hypothesis (" + first->note + ") holds with (a,b,c) != 0", *first);
    o.detail = counts + "; " + failures;
  } else {
    o.detail = counts + ", always with a=b=c=0";
  }
  o.scale = scale_text({3}, qs, "exhaustive over (a,b,c,d1,d2,d3)");
  return o;
}

/// Violated part of the degree-4 rule for t^4 + a t^2 + b t + c, or 0.
int degree4_violation(const Field& f, Fe a, Fe b, Fe c) {
  const Poly poly(f, {c, b, a, f.zero(), f.one()});
  const std::size_t roots = count_roots_in_closure(poly);
  if (roots > 2) return 0;
  const bool form1 = a == Fe{} && c == Fe{};
  const Fe u = f.div(a, f.from_int(-2));
  const bool form2 = b == Fe{} && c == f.mul(u, u);
  if (!form1 && !form2) return 1;
  const std::size_t nonzero = roots - (c == Fe{} ? 1 : 0);
  if (nonzero <= 1 && !form1) return 2;
  return 0;
}

Outcome char3_degree4(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3, 9}, char3_order);
  if (qs.empty()) return skipped("override outside the claim's domain");
  std::uint64_t tuples = 0, two = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (std::uint64_t ia = 0; ia < q; ++ia)
      for (std::uint64_t ib = 0; ib < q; ++ib)
        for (std::uint64_t ic = 0; ic < q; ++ic) {
          const Fe a = f.element(ia), b = f.element(ib), c = f.element(ic);
          ++tuples;
          if (count_roots_in_closure(Poly(f, {c, b, a, f.zero(), f.one()})) <= 2) ++two;
          if (int v = degree4_violation(f, a, b, c)) {
            Witness w = base_witness("degree4", f, 4);
            w.values = {ia, ib, ic};
            return refuted(v == 1 ? "at most two roots but neither shape" : "one nonzero root but not t^4+vt", w);
          }
        }
  }
  Outcome o;
  o.scale = scale_text({4}, qs, "exhaustive over (a,b,c)");
  o.detail = std::to_string(tuples) + " tuples scanned, " + std::to_string(two) + " with at most two closure roots";
  return o;
}

Outcome exceptional_catalog(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3, 9}, char3_order);
  if (qs.empty() || (p.n && *p.n != 3)) return skipped("override outside the claim's domain");
  std::size_t spaces = 0, conjugates = 0;
  Rng rng(p.seed);
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (const auto& b : exceptional_blocks(f)) {
      const MatSpace v = build(b, f);
      const bool ex = is_exceptional(v, p.config);
      const bool fully = reduced_form(v, ReducedLevel::Fully, p.config);
      const bool well = reduced_form(v, ReducedLevel::Well, p.config);
      const bool semi = reduced_form(v, ReducedLevel::Semi, p.config);
      if (!(ex && fully && well && semi)) {
        Witness w = base_witness("reduced", f, 3);
        w.spaces.push_back(format_space(v));
        w.note = !ex ? "exceptional" : !fully ? "fully" : !well ? "well" : "semi";
        return refuted(b.to_string() + " fails " + w.note, w);
      }
      ++spaces;
      // Conjugates stay exceptional; the reduced predicates must stay nested.
      for (int t = 0; t < 4; ++t) {
        Mat pm(f, 3);
        do {
          for (auto& e : pm.entries()) e = f.element(rng.below(q));
        } while (!pm.is_invertible());
        const MatSpace c = conjugate(v, pm);
        const bool cf = reduced_form(c, ReducedLevel::Fully, p.config);
        const bool cw = reduced_form(c, ReducedLevel::Well, p.config);
        const bool cs = reduced_form(c, ReducedLevel::Semi, p.config);
        if (!is_exceptional(c, p.config) || (cf && !cw) || (cw && !cs)) {
          Witness w = base_witness("reduced", f, 3);
          w.spaces.push_back(format_space(c));
          w.note = "chain";
          return refuted("a conjugate breaks exceptionality or the reduced chain", w);
        }
        ++conjugates;
      }
    }
  }
  Outcome o;
  o.scale = scale_text({3}, qs, "exhaustive");
  o.detail = std::to_string(spaces) + " F/G spaces exceptional and fully reduced; " + std::to_string(conjugates) +
             " random conjugates keep Fully => Well => Semi";
  return o;
}

Outcome spansingular(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3, 9}, char3_order);
  if (qs.empty() || (p.n && *p.n != 3)) return skipped("override outside the claim's domain");
  std::size_t spaces = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (const auto& b : exceptional_blocks(f)) {
      const MatSpace v = build(b, f);
      std::vector<Vec> rows;
      for_each_member(v, [&](std::span<const Fe> e) {
        if (Mat(f, 3, Vec(e.begin(), e.end())).det() == Fe{}) rows.emplace_back(e.begin(), e.end());
        return true;
      });
      if (!(MatSpace(f, 3, rows) == v)) {
        Witness w = base_witness("singular", f, 3);
        w.spaces.push_back(format_space(v));
        return refuted(b.to_string() + " is not spanned by its singular members", w);
      }
      ++spaces;
    }
  }
  Outcome o;
  o.scale = scale_text({3}, qs, "exhaustive");
  o.detail = std::to_string(spaces) + " F/G spaces spanned by their singular members";
  return o;
}

Outcome nilpotent_hyperplane(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3}, char3_order);
  if (qs.empty() || (p.n && *p.n != 3)) return skipped("override outside the claim's domain");
  std::uint64_t hyperplanes = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (const auto& b : exceptional_blocks(f)) {
      const MatSpace v = build(FD::w1star(3, 0, b), f);
      const auto members = member_eigs(v);  // coords of every member
      std::vector<bool> nilpotent;
      {
        MemberCursor cur(v, false);
        cur.seek(0);
        do {
          nilpotent.push_back(is_nilpotent_poly(cur.matrix().charpoly()));
        } while (cur.next());
      }
      const std::uint64_t forms = projective_count(q, v.dim());
      for (std::uint64_t r = 0; r < forms; ++r) {
        const Vec phi = projective_point(f, v.dim(), r);
        bool found = false;
        for (std::size_t i = 0; i < members.size() && !found; ++i) {
          Fe s{};
          for (std::size_t k = 0; k < phi.size(); ++k) s = f.add(s, f.mul(phi[k], f.element(members[i].coords[k])));
          if (s == Fe{} && !nilpotent[i]) found = true;
        }
        ++hyperplanes;
        if (!found) {
          Witness w = base_witness("hyperplane", f, 3);
          w.spaces.push_back(format_space(v));
          w.values = vec_indices(phi);
          return refuted("a hyperplane of " + b.to_string() + " is nilpotent", w);
        }
      }
    }
  }
  Outcome o;
  o.scale = scale_text({3}, qs, "all hyperplanes, all members");
  o.detail = std::to_string(hyperplanes) + " hyperplanes, each with a non-nilpotent member";
  return o;
}

Poly corner_expected(const Field& f, std::size_t n, Fe e, bool minus) {
  // t^(n-2) (t^2 - e) for E_{1,n} + e E_{n,1}; t^(n-2) (t^2 + e) for the minus sign.
  std::vector<Fe> c(n + 1, Fe{});
  c[n] = f.one();
  c[n - 2] = f.add(c[n - 2], minus ? e : f.neg(e));
  return Poly(f, c);
}

Outcome corner_identity(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {3, 5}, valid_order);
  auto ns = pick<std::size_t>(p.n, {2, 3, 4, 5, 6}, [](std::size_t n) { return n >= 2 && n <= 12; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  std::uint64_t mats = 0;
  for (auto q : qs) {
    const Field f = Field::of_order(q);
    for (auto n : ns)
      for (std::uint64_t ie = 0; ie < q; ++ie)
        for (bool minus : {false, true}) {
          const Fe e = f.element(ie);
          Mat m = unit(f, n, 1, n) + unit(f, n, n, 1).scaled(minus ? f.neg(e) : e);
          const Poly want = corner_expected(f, n, e, minus);
          ++mats;
          if (!(m.charpoly() == want)) {
            Witness w = base_witness("charpoly", f, n);
            w.matrices.push_back(mat_indices(m));
            w.values = vec_indices(want.coeffs());
            return refuted("corner charpoly differs", w);
          }
        }
  }
  Outcome o;
  o.scale = scale_text(ns, qs, "all e in K, both signs");
  o.detail = std::to_string(mats) +
             " matrices; E_{1,n}+e E_{n,1} has t^(n-2)(t^2-e), so the t^(n-2)(t^2+e) form belongs to E_{1,n}-e E_{n,1}";
  return o;
}

// ---------------------------------------------------------------- char-2 probes

Outcome probe_outcome(const MatSpace& best, const SpectrumQuery& query, std::size_t bound, const ExecConfig& config,
                      const std::string& what) {
  if (best.dim() > bound && exhaust(best, query, config).holds) {
    Witness w = base_witness("exceeds", best.field(), best.n());
    w.spaces.push_back(format_space(best));
    w.query = query.to_string();
    w.values = {bound};
    return refuted(what + ": space above the conjectured bound", w);
  }
  return skipped("probe: no space above the conjectured bound (best dim " + std::to_string(best.dim()) + ", bound " +
                 std::to_string(bound) + ")");
}

Outcome conj_probe(const ClaimParams& p, bool two) {
  auto qs = pick<std::uint64_t>(p.q, {4}, [](std::uint64_t q) { return even_order(q) && q > 2; });
  auto ns = pick<std::size_t>(p.n, {3}, [](std::size_t n) { return n >= 2 && n <= 4; });
  if (qs.empty() || ns.empty()) return skipped("override outside the claim's domain");
  const Field f = Field::of_order(qs[0]);
  const std::size_t n = ns[0];
  const SpectrumQuery query = two ? kTwoBase : kOneStarBase;
  GrowOptions opt;
  opt.budget = 2000;
  opt.rng_seed = p.seed;
  opt.config = p.config;
  const GrowResult r = grow(build(FD::nt(n), f), query, opt);
  const std::size_t bound = *known_dimension_bound(n, f, query);
  Outcome o = probe_outcome(r.best, query, bound, p.config, two ? "2spec" : "1star");
  o.scale = scale_text(ns, qs, "greedy growth, 2000 draws");
  o.detail = "best dim " + std::to_string(r.best.dim()) + " after " + std::to_string(r.iterations) + " draws, " +
             std::to_string(r.restarts.size()) + " restarts";
  return o;
}

Outcome conj_classes(const ClaimParams& p) {
  auto qs = pick<std::uint64_t>(p.q, {4}, [](std::uint64_t q) { return even_order(q) && q > 2; });
  if (qs.empty() || (p.n && *p.n != 3)) return skipped("override outside the claim's domain");
  const Field f = Field::of_order(qs[0]);
  const std::size_t n = 3;
  GrowOptions opt;
  opt.budget = 2000;
  opt.rng_seed = p.seed;
  opt.config = p.config;
  const GrowResult r = grow(build(FD::nt(n), f), kOneStarClosure, opt);
  Outcome o;
  o.scale = scale_text({n}, qs, "greedy growth, 2000 draws, similarity scan");
  if (r.best.dim() != c2(n) + 2) {
    o = skipped("probe: growth reached dim " + std::to_string(r.best.dim()) + ", not " + std::to_string(c2(n) + 2));
    o.scale = scale_text({n}, qs, "greedy growth, 2000 draws");
    return o;
  }
  const MatSpace models[] = {build(FD::vee(FD::sl(2), FD::nt(1)), f), build(FD::vee(FD::nt(1), FD::sl(2)), f)};
  bool unknown = false;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto d = decide_similarity(r.best, models[i], p.config);
    if (d.verdict == Verdict::SimilarWithWitness) {
      o = skipped(std::string("probe: dim-5 space found, similar to ") + (i == 0 ? "sl2 v NT1" : "NT1 v sl2"));
      o.scale = scale_text({n}, qs, "greedy growth, 2000 draws, similarity scan");
      return o;
    }
    if (d.verdict == Verdict::Unknown) unknown = true;
  }
  if (unknown) return skipped("probe: similarity undecided within budget");
  Witness w = base_witness("not-similar", f, n);
  w.spaces.push_back(format_space(r.best));
  for (const auto& m : models) w.spaces.push_back(format_space(m));
  w.expected = true;
  return refuted("a maximal 1star-closure space is similar to neither model", w);
}

// ---------------------------------------------------------------- registry

struct Entry {
  ClaimInfo info;
  std::function<Outcome(const ClaimParams&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"thm-1star-bound-attained", {"bound"},
        "odd characteristic: 1*-spec dimension bound binom(n,2)+1, attained by K D_I + NT_n"},
       [](const ClaimParams& p) { return bound_attained(p, false); }},
      {{"thm-2spec-bound-attained", {"bound"},
        "odd characteristic, n >= 3: 2-spec dimension bound binom(n,2)+2, attained by K I_n + K D_I + NT_n"},
       [](const ClaimParams& p) { return bound_attained(p, true); }},
      {{"maximality-1star", {"maximality"}, "K D_{n} + NT_n admits no 1*-spec one-step extension"},
       [](const ClaimParams& p) { return maximality(p, false); }},
      {{"maximality-2spec", {"maximality"}, "K I_n + K D_I + NT_n admits no 2-spec one-step extension"},
       [](const ClaimParams& p) { return maximality(p, true); }},
      {{"char2-counterexample-1star", {"char2", "bound"},
        "characteristic 2: sl_2 v NT_{n-2} is 1star-closure of dimension binom(n,2)+2"},
       [](const ClaimParams& p) { return char2_excess(p, false); }},
      {{"char2-counterexample-2spec", {"char2", "bound"},
        "characteristic 2: sl_2 v (K I + NT) has dimension binom(n,2)+3 and sl_2 v sl_2 dimension 10, both 2spec-closure"},
       [](const ClaimParams& p) { return char2_excess(p, true); }},
      {{"gf2-everything-2spec", {"char2"}, "over GF(2) every matrix space is 2-spec"}, gf2_everything},
      {{"trace-lemma", {"lemma"},
        "2-spec spaces in odd characteristic, n >= 3: rank-1 trace-0 members are pairwise trace-orthogonal"},
       [](const ClaimParams& p) { return trace_claims(p, false); }},
      {{"trace-corollary", {"lemma"}, "the span of rank-1 trace-0 members of a 2-spec space has dimension <= n^2/2"},
       [](const ClaimParams& p) { return trace_claims(p, true); }},
      {{"covering-remark", {"lemma", "covering"},
        "the (i,lambda) subspaces plus {0} x K^(n-1) miss exactly the nonzero constant vectors"},
       covering},
      {{"good-vector-existence", {"goodvec"},
        "odd characteristic: 2-spec (n >= 3) and 1*-spec spaces have a good vector; sl_2 in characteristic 2 has none"},
       good_vectors},
      {{"uniqueness-v1star", {"uniqueness"}, "K D_I + NT_n and K D_J + NT_n are similar iff I = J"},
       [](const ClaimParams& p) { return uniqueness(p, false); }},
      {{"uniqueness-v2", {"uniqueness"}, "K I + K D_I + NT_n and K I + K D_J + NT_n are similar iff J = I or its complement"},
       [](const ClaimParams& p) { return uniqueness(p, true); }},
      {{"g4-vs-g4p-vs-vI", {"uniqueness"}, "G4, G4' and the spaces K I + K D_I + NT_4 are pairwise non-similar"},
       g4_separation},
      {{"w-family-uniqueness-invariants", {"uniqueness", "char3"},
        "image profiles separate W(2)_{p,F} from K I + K D_I + NT_n and from W(2) with another p"},
       w_family_images},
      {{"transitivity-lemma", {"uniqueness", "char3"},
        "image-dimension bounds along the flag span(e_1..e_k) for V_I(2), W(2)_{p,F} and F v G"},
       transitivity},
      {{"normalizer", {"lemma", "uniqueness"}, "P NT_n P^-1 = NT_n iff P is upper-triangular"}, normalizer},
      {{"lemma-2x2", {"lemma"},
        "span([[a,0],[b,c]], E_12) is 1star-closure iff b = 0 and a = c, a = 0 or c = 0"},
       lemma_2x2},
      {{"n2-classification", {"lemma"},
        "odd characteristic: a 2-dimensional 1star-closure plane of M_2 is similar to K I_2 + NT_2, K E_11 + NT_2 or K E_22 + NT_2"},
       n2_classification},
      {{"linear-form-lemma", {"lemma"},
        "a form on K D_I + NT_n taking only 0 or the nonzero eigenvalue is 0 or the I-diagonal entry"},
       linear_form},
      {{"lemma-ALBC", {"lemma"},
        "p = 1: if every M_{L,C} has at most two closure eigenvalues then lambda + mu = 0, and f = g = 0 outside characteristic 3"},
       lemma_albc},
      {{"char3-ALBC", {"char3", "lemma"}, "characteristic 3: either hypothesis on span(A, B, D) forces a = b = c = 0"},
       char3_albc},
      {{"char3-degree4", {"char3", "lemma"},
        "characteristic 3: t^4 + a t^2 + b t + c with at most two closure roots is t^4 + u t or t^4 - 2u t^2 + u^2"},
       char3_degree4},
      {{"exceptional-catalog", {"char3"}, "F_delta and G_delta are exceptional and fully reduced"}, exceptional_catalog},
      {{"spansingular", {"char3", "lemma"}, "F_delta and G_delta are spanned by their singular members"}, spansingular},
      {{"nilpotent-hyperplane", {"char3", "lemma"}, "no hyperplane of F_delta or G_delta consists of nilpotent matrices"},
       nilpotent_hyperplane},
      {{"charpoly-corner-identity", {"lemma"}, "characteristic polynomial of E_{1,n} + e E_{n,1}"}, corner_identity},
      {{"conj-char2-1star-probe", {"probe", "char2"},
        "characteristic 2, q > 2: conjectured 1*-spec bound binom(n,2)+2 (search probe)"},
       [](const ClaimParams& p) { return conj_probe(p, false); }},
      {{"conj-char2-2spec-probe", {"probe", "char2"},
        "characteristic 2, q > 2: conjectured 2-spec bound binom(n,2)+3, or +4 at n = 4 (search probe)"},
       [](const ClaimParams& p) { return conj_probe(p, true); }},
      {{"conj-char2-1star-classes", {"probe", "char2"},
        "characteristic 2, q > 2: 1star-closure spaces of dimension binom(n,2)+2 are NT_p v sl_2 v NT_{n-p-2} (search probe)"},
       conj_classes},
  };
  return table;
}

}  // namespace

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Verified: return "Verified";
    case ClaimStatus::Refuted: return "Refuted";
    case ClaimStatus::Skipped: return "Skipped";
  }
  return "?";
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

ClaimResult run_claim(std::string_view claim_id, const ClaimParams& params) {
  const auto& table = entries();
  auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.info.id == claim_id; });
  if (it == table.end()) throw Error(ErrorCode::UnknownClaim, std::string(claim_id));
  ClaimResult res;
  res.claim_id = it->info.id;
  res.anchor = it->info.anchor;
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = it->run(params);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    o = skipped(std::string("budget: ") + e.what());
  }
  const auto stop = std::chrono::steady_clock::now();
  res.status = o.status;
  res.reason = std::move(o.reason);
  res.scale = std::move(o.scale);
  res.detail = std::move(o.detail);
  res.witness = std::move(o.witness);
  res.runtime_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
  return res;
}

Report run_all(const std::vector<std::string>& tags, const ClaimParams& params, const std::vector<std::string>& ids) {
  Report rep;
  for (const auto& info : claim_registry()) {
    bool take = tags.empty() && ids.empty();
    for (const auto& t : tags)
      if (std::find(info.tags.begin(), info.tags.end(), t) != info.tags.end()) take = true;
    if (std::find(ids.begin(), ids.end(), info.id) != ids.end()) take = true;
    if (!take) continue;
    rep.results.push_back(run_claim(info.id, params));
    switch (rep.results.back().status) {
      case ClaimStatus::Verified: ++rep.verified; break;
      case ClaimStatus::Refuted: ++rep.refuted; break;
      case ClaimStatus::Skipped: ++rep.skipped; break;
    }
  }
  for (const auto& id : ids) {
    const auto& reg = claim_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const ClaimInfo& c) { return c.id == id; })) {
      throw Error(ErrorCode::UnknownClaim, id);
    }
  }
  return rep;
}

std::string to_json(const Report& report, bool with_runtime) {
  using nlohmann::ordered_json;
  ordered_json claims = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json c;
    c["claim_id"] = r.claim_id;
    c["status"] = std::string(to_string(r.status));
    if (!r.reason.empty()) c["reason"] = r.reason;
    c["scale"] = r.scale;
    if (r.witness) {
      const Witness& w = *r.witness;
      ordered_json wj;
      wj["kind"] = w.kind;
      wj["field"] = w.field;
      wj["n"] = w.n;
      wj["spaces"] = w.spaces;
      wj["matrices"] = w.matrices;
      wj["query"] = w.query;
      wj["values"] = w.values;
      wj["expected"] = w.expected;
      wj["note"] = w.note;
      c["witness"] = wj;
    }
    c["runtime_ms"] = with_runtime ? r.runtime_ms : 0;
    c["anchor"] = r.anchor;
    c["detail"] = r.detail;
    claims.push_back(c);
  }
  ordered_json doc;
  doc["claims"] = claims;
  doc["summary"] = {{"verified", report.verified}, {"refuted", report.refuted}, {"skipped", report.skipped}};
  return doc.dump(2) + "\n";
}

bool recheck_witness(const Witness& w, const ExecConfig& config) {
  const Field f = Field::parse(w.field);
  auto space = [&](std::size_t i) { return parse_space(w.spaces.at(i)); };
  const std::string& k = w.kind;
  if (k == "spec") {
    const MatSpace v = space(0);
    const SpectrumQuery q = SpectrumQuery::parse(w.query);
    if (!w.matrices.empty()) {
      const Mat m = mat_from(f, w.n, w.matrices[0]);
      if (!v.contains(m) || count_eigs(m, q).satisfies == w.expected) return false;
    }
    return exhaust(v, q, config).holds != w.expected;
  }
  if (k == "dim") return space(0).dim() != w.values.at(0);
  if (k == "exceeds") {
    const MatSpace v = space(0);
    return v.dim() > w.values.at(0) && exhaust(v, SpectrumQuery::parse(w.query), config).holds;
  }
  if (k == "similar") {
    const Mat pm = mat_from(f, w.n, w.matrices.at(0));
    return !w.expected && similar_witness(space(0), space(1), pm);
  }
  if (k == "not-similar") {
    if (!w.expected) return false;
    const MatSpace v = space(0);
    for (std::size_t i = 1; i < w.spaces.size(); ++i)
      if (similar_brute(v, space(i), config)) return false;
    return true;
  }
  if (k == "trace-pair") {
    const MatSpace v = space(0);
    const Mat a = mat_from(f, w.n, w.matrices.at(0));
    const Mat b = mat_from(f, w.n, w.matrices.at(1));
    for (const Mat* m : {&a, &b})
      if (!v.contains(*m) || m->rank() > 1 || m->trace() != Fe{}) return false;
    return exhaust(v, kTwoBase, config).holds && tr_product(a, b) != Fe{};
  }
  if (k == "span-bound") {
    const MatSpace v = space(0);
    std::vector<Vec> rows;
    for (const auto& m : rank1_trace0(v)) rows.emplace_back(m.entries().begin(), m.entries().end());
    const std::size_t d = linalg::rank(f, rows);
    return exhaust(v, kTwoBase, config).holds && 2 * d > v.n() * v.n();
  }
  if (k == "cover") {
    const Vec x = vec_from(f, w.values);
    const bool uncovered = !covered(f, x);
    return uncovered == w.expected && uncovered != constant_nonzero(x);
  }
  if (k == "good-vector") {
    const auto survey = good_vector_survey(space(0), config);
    const bool any = std::any_of(survey.begin(), survey.end(), [](const auto& r) { return r.is_good; });
    return any != w.expected;
  }
  if (k == "linear-form") {
    const MatSpace v = space(0);
    const std::size_t i0 = w.values.back() - 1;
    const Vec phi = vec_from(f, std::span(w.values).first(w.values.size() - 1));
    const bool zero = std::all_of(phi.begin(), phi.end(), [](Fe e) { return e == Fe{}; });
    const bool predicted = zero || phi == diagonal_form(v, i0);
    return predicted == w.expected && linear_form_hypothesis(f, member_eigs(v), phi) != predicted;
  }
  if (k == "albc") {
    const Fe l = f.element(w.values.at(0)), m = f.element(w.values.at(1));
    const Fe fc = f.element(w.values.at(2)), gc = f.element(w.values.at(3));
    return albc_hypothesis(f, l, m, fc, gc) && !albc_conclusion(f, l, m, fc, gc);
  }
  if (k == "albc3") {
    const std::uint32_t dd[3] = {static_cast<std::uint32_t>(w.values.at(3)), static_cast<std::uint32_t>(w.values.at(4)),
                                 static_cast<std::uint32_t>(w.values.at(5))};
    const Albc3 m = albc3_mats(f, f.element(w.values[0]), f.element(w.values[1]), f.element(w.values[2]), dd);
    const bool nonzero = w.values[0] || w.values[1] || w.values[2];
    return nonzero && (albc3_hyp_a(f, m, dd, config) || albc3_hyp_b(f, m));
  }
  if (k == "degree4") {
    return degree4_violation(f, f.element(w.values.at(0)), f.element(w.values.at(1)), f.element(w.values.at(2))) != 0;
  }
  if (k == "two-by-two") {
    const Fe a = f.element(w.values.at(0)), b = f.element(w.values.at(1)), c = f.element(w.values.at(2));
    return two_by_two_predicted(a, b, c) == w.expected && two_by_two_holds(f, a, b, c, config) != w.expected;
  }
  if (k == "hyperplane") {
    const MatSpace v = space(0);
    const Vec phi = vec_from(f, w.values);
    bool all_nil = true;
    MemberCursor cur(v, false);
    cur.seek(0);
    do {
      Fe s{};
      for (std::size_t i = 0; i < phi.size(); ++i) s = f.add(s, f.mul(phi[i], f.element(cur.digits()[i])));
      if (s == Fe{} && !is_nilpotent_poly(cur.matrix().charpoly())) all_nil = false;
    } while (all_nil && cur.next());
    return all_nil;
  }
  if (k == "normalizer") {
    const Mat m = mat_from(f, w.n, w.matrices.at(0));
    return normalizer_check(m) != upper_triangular(m);
  }
  if (k == "charpoly") {
    const Mat m = mat_from(f, w.n, w.matrices.at(0));
    return !(m.charpoly() == Poly(f, vec_from(f, w.values)));
  }
  if (k == "profile") {
    const MatSpace a = space(0), b = space(1);
    if (w.note == "image_profile") return image_profile_of(a, config) == image_profile_of(b, config);
    return !distinguishing_invariant(invariant_battery(a, config), invariant_battery(b, config));
  }
  if (k == "image") {
    const MatSpace v = space(0);
    const std::size_t hi = w.values.at(w.values.size() - 1);
    const std::size_t lo = w.values.at(w.values.size() - 2);
    const Vec x = vec_from(f, std::span(w.values).first(w.values.size() - 2));
    const std::size_t d = image_dim(v, x);
    return d < lo || d > hi;
  }
  if (k == "reduced") {
    const MatSpace v = space(0);
    if (w.note == "exceptional") return !is_exceptional(v, config);
    if (w.note == "fully") return !reduced_form(v, ReducedLevel::Fully, config);
    if (w.note == "well") return !reduced_form(v, ReducedLevel::Well, config);
    if (w.note == "semi") return !reduced_form(v, ReducedLevel::Semi, config);
    const bool cf = reduced_form(v, ReducedLevel::Fully, config);
    const bool cw = reduced_form(v, ReducedLevel::Well, config);
    const bool cs = reduced_form(v, ReducedLevel::Semi, config);
    return !is_exceptional(v, config) || (cf && !cw) || (cw && !cs);
  }
  if (k == "singular") {
    const MatSpace v = space(0);
    std::vector<Vec> rows;
    for_each_member(v, [&](std::span<const Fe> e) {
      if (Mat(f, v.n(), Vec(e.begin(), e.end())).det() == Fe{}) rows.emplace_back(e.begin(), e.end());
      return true;
    });
    return !(MatSpace(f, v.n(), rows) == v);
  }
  throw Error(ErrorCode::BadParameters, "unknown witness kind '" + k + "'");
}

}  // namespace specspace
