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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specspace/gf.hpp"
#include "specspace/poly.hpp"

namespace specspace {

using Vec = std::vector<Fe>;

/// Dense n x n matrix over a finite field, row-major. Indices are 0-based,
/// so the 1-based unit matrix E_{i,j} is `Mat::unit(f, n, i - 1, j - 1)`.
class Mat {
 public:
  Mat(Field field, std::size_t n) : field_(std::move(field)), n_(n), a_(n * n) {}
  Mat(Field field, std::size_t n, std::vector<Fe> entries);

  static Mat identity(const Field& field, std::size_t n);
  static Mat unit(const Field& field, std::size_t n, std::size_t i, std::size_t j);
  /// Row-major integers, reduced into the prime subfield.
  static Mat from_ints(const Field& field, std::size_t n, std::initializer_list<std::int64_t> entries);

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  Fe at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Fe v) { a_[i * n_ + j] = v; }
  std::span<const Fe> entries() const { return a_; }
  std::span<Fe> entries() { return a_; }
  bool is_zero() const;

  Mat transpose() const;
  Mat scaled(Fe c) const;
  Vec apply(std::span<const Fe> x) const;

  Fe trace() const;
  Fe det() const;
  std::size_t rank() const;
  /// Basis of {v : M v = 0}, in reduced row echelon form.
  std::vector<Vec> kernel() const;
  /// SingularP when not invertible.
  Mat inverse() const;
  bool is_invertible() const { return rank() == n_; }

  /// Monic characteristic polynomial det(tI - M), Berkowitz (division free).
  Poly charpoly() const;

  /// n lines of n comma-separated element literals.
  std::string to_text() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.a_ == b.a_;
  }

 private:
  Field field_;
  std::size_t n_;
  std::vector<Fe> a_;
};

/// Where eigenvalues are counted.
enum class Location { BaseField, Closure };

/// One of the four spectral classes: (k, BaseField, false) is k-spec,
/// (k, Closure, false) the closure variant, and exclude_zero selects the
/// starred variants that ignore the eigenvalue 0.
struct SpectrumQuery {
  unsigned bound = 0;
  Location location = Location::Closure;
  bool exclude_zero = false;

  friend bool operator==(const SpectrumQuery&, const SpectrumQuery&) = default;

  /// `kspec:K`, `kspec-closure:K`, `kstar:K`, `kstar-closure:K`, or the short
  /// forms `2spec`, `2spec-closure`, `1star`, `1star-closure`.
  static SpectrumQuery parse(std::string_view literal);
  std::string to_string() const;
};

struct EigCount {
  std::size_t count = 0;
  bool satisfies = false;
};

/// Distinct eigenvalues counted per `query`, from a characteristic polynomial.
EigCount count_eigs(const Poly& charpoly, const SpectrumQuery& query);
EigCount count_eigs(const Mat& m, const SpectrumQuery& query);

namespace linalg {

/// Reduces `rows` (each of equal length) to reduced row echelon form in place,
/// dropping zero rows; returns the pivot columns.
std::vector<std::size_t> rref(const Field& field, std::vector<Vec>& rows);

/// Basis of {x : rows . x = 0} for x of length `ncols`, in RREF.
std::vector<Vec> nullspace(const Field& field, std::vector<Vec> rows, std::size_t ncols);

std::size_t rank(const Field& field, std::vector<Vec> rows);

/// Scratch-buffer Berkowitz used by the enumeration kernels: writes the
/// ascending coefficients of det(tI - A) into `out` (size n + 1).
class CharpolyWorkspace {
 public:
  CharpolyWorkspace(const Field& field, std::size_t n);
  void compute(std::span<const Fe> a, std::vector<Fe>& out);

 private:
  Field field_;
  std::size_t n_;
  std::vector<Fe> prev_, next_, t_, v_, w_;
};

}  // namespace linalg

}  // namespace specspace
