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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specspace/config.hpp"
#include "specspace/mat.hpp"

namespace specspace {

/// A linear subspace of M_n(K). The basis is kept as the reduced row echelon
/// form of the row-major n^2-vectorizations, so equal subspaces compare equal.
class MatSpace {
 public:
  MatSpace(Field field, std::size_t n);  // the zero subspace
  /// Canonicalizes arbitrary spanning vectors of length n^2.
  MatSpace(Field field, std::size_t n, std::vector<Vec> rows);

  /// DimensionMismatch or FieldMismatch on inconsistent inputs.
  static MatSpace from_matrices(std::span<const Mat> mats);
  static MatSpace from_matrices(const Field& field, std::size_t n, std::span<const Mat> mats);
  static MatSpace full(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Mat basis(std::size_t i) const;
  std::vector<Mat> basis_matrices() const;

  /// Linear forms (as n^2-vectors, RREF) whose common kernel is the space.
  const std::vector<Vec>& annihilator() const { return ann_; }

  bool contains(const Mat& m) const;
  bool contains(std::span<const Fe> vectorized) const;
  /// sum_i coeffs[i] * basis(i).
  Mat member(std::span<const Fe> coeffs) const;
  /// Coordinates of a member with respect to the canonical basis.
  std::optional<Vec> coordinates(const Mat& m) const;

  friend bool operator==(const MatSpace& a, const MatSpace& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.rows_ == b.rows_;
  }

 private:
  void canonicalize();

  Field field_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> ann_;
};

MatSpace sum(const MatSpace& v, const MatSpace& w);
MatSpace intersect(const MatSpace& v, const MatSpace& w);
/// P V P^{-1}; SingularP when P is not invertible.
MatSpace conjugate(const MatSpace& v, const Mat& p);
/// span(V, M).
MatSpace extend(const MatSpace& v, const Mat& m);
MatSpace transpose(const MatSpace& v);

/// Walks the members sum c_i B_i of a space in lexicographic order of the
/// coefficient tuples (element indices, first basis vector most significant).
/// In projective mode only the zero member and the tuples whose leading
/// nonzero coefficient is 1 are visited, again in lexicographic order.
class MemberCursor {
 public:
  MemberCursor(const MatSpace& space, bool projective);

  /// Number of visited members (kSaturated on overflow).
  std::uint64_t size() const { return size_; }
  void seek(std::uint64_t index);
  /// Advances to index + 1; false past the end.
  bool next();
  std::uint64_t index() const { return index_; }
  std::span<const Fe> entries() const { return m_; }
  const std::vector<std::uint32_t>& digits() const { return digits_; }
  Mat matrix() const;

 private:
  void rebuild();
  void add_scaled(std::size_t basis, Fe c);

  const MatSpace* space_;
  bool projective_;
  std::uint64_t size_;
  std::uint64_t index_ = 0;
  std::vector<std::uint32_t> digits_;
  std::size_t lead_ = 0;  // projective mode: leading position of the current block
  Vec m_;
};

/// Calls fn(entries) for every member; stops early when fn returns false.
template <class Fn>
void for_each_member(const MatSpace& space, Fn fn) {
  MemberCursor cur(space, false);
  if (cur.size() == 0) return;
  cur.seek(0);
  do {
    if (!fn(cur.entries())) return;
  } while (cur.next());
}

enum class Coverage { Full, Sampled };

struct CheckMode {
  enum class Kind { Exhaustive, Sampled, Auto };
  Kind kind = Kind::Auto;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  /// Auto: exhaustive when q^dim <= limit, else sampled; 0 means the
  /// configured exhaustive limit.
  std::uint64_t limit = 0;

  static CheckMode exhaustive() { return {Kind::Exhaustive, 0, 0, 0}; }
  static CheckMode sampled(std::uint64_t count, std::uint64_t seed) { return {Kind::Sampled, count, seed, 0}; }
  static CheckMode automatic(std::uint64_t limit = 0, std::uint64_t samples = 1'000'000, std::uint64_t seed = 0) {
    return {Kind::Auto, samples, seed, limit};
  }
};

struct CheckResult {
  bool holds = true;
  std::optional<Mat> witness;
  Coverage coverage = Coverage::Full;
  /// Members whose spectrum condition is settled: all q^dim in exhaustive
  /// mode (scalar multiples share a verdict), the draw count when sampled.
  std::uint64_t members_covered = 0;
  std::uint64_t members_total = 0;  // q^dim, kSaturated on overflow
  /// Characteristic polynomials actually evaluated.
  std::uint64_t evaluations = 0;
};

/// Decides whether every member satisfies `query`. Exhaustive mode throws
/// BudgetExceeded when q^dim exceeds the configured limit. The witness of a
/// failing exhaustive check is the first violating member in cursor order,
/// independent of the thread count.
CheckResult check_spec(const MatSpace& v, const SpectrumQuery& query, const CheckMode& mode,
                       const ExecConfig& config = {});

/// Checks only the members of span(V, M) outside V, assuming V itself
/// satisfies the query. Visits M + v for v in V (scaling preserves the
/// distinct-eigenvalue counts). Throws BudgetExceeded when q^dim(V) exceeds
/// the exhaustive limit.
CheckResult check_extension(const MatSpace& v, const Mat& m, const SpectrumQuery& query,
                            const ExecConfig& config = {});

struct GoodVectorReport {
  Vec vector;
  bool is_good = true;
  /// Present iff bad: nonzero row l with x.l in V and l.x = 0.
  std::optional<Vec> witness;
};

/// ZeroVector for x == 0.
GoodVectorReport good_vector(const MatSpace& v, std::span<const Fe> x);

/// One report per point of P(K^n), in projective_point order.
/// BudgetExceeded above config.survey_limit points.
std::vector<GoodVectorReport> good_vector_survey(const MatSpace& v, const ExecConfig& config = {});

/// dim of {u x : u in V}.
std::size_t image_dim(const MatSpace& v, std::span<const Fe> x);

/// Space file I/O. Matrices are written one row per line as comma-separated
/// element literals (k integers per element over GF(p^k)).
std::string format_space(const MatSpace& v);
/// ParseError with 1-based line and column.
MatSpace parse_space(std::string_view text);
MatSpace read_space_file(const std::string& path);
void write_space_file(const std::string& path, const MatSpace& v);

}  // namespace specspace
