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
#include <string>
#include <string_view>
#include <vector>

#include "specspace/config.hpp"
#include "specspace/span.hpp"

namespace specspace {

enum class FamilyTag {
  DI,           // K D_I
  NT,           // strictly upper-triangular
  SL,           // trace zero
  V1star,       // K D_I + NT_n
  V2,           // K I_n + K D_I + NT_n
  Vee,          // block upper-triangular A v B
  G4,           // [[A, B], [0, A]]
  G4prime,      // [[A, B], [0, A^T]]
  Fdelta,       // char 3, n = 3
  Gdelta,       // char 3, n = 3
  W1star,       // NT_p v F v NT_{n-p-3}
  W2,           // K I_n + W1star
  Hchar2,       // char 2, n = 4
  LoewyRadwan,  // k-bar-spec block example
};

std::string_view to_string(FamilyTag tag);

/// A named family instance. Index sets are 1-based; delta is an element
/// index of the target field (negative values are read in the prime field).
struct FamilyDescriptor {
  FamilyTag tag = FamilyTag::NT;
  std::size_t n = 0;
  std::vector<std::size_t> I;
  std::int64_t delta = 0;
  std::size_t p = 0;
  std::size_t k = 0;
  std::vector<FamilyDescriptor> inner;  // Vee: two operands; W: the 3x3 block

  static FamilyDescriptor di(std::size_t n, std::vector<std::size_t> I);
  static FamilyDescriptor nt(std::size_t n);
  static FamilyDescriptor sl(std::size_t n);
  static FamilyDescriptor v1star(std::size_t n, std::vector<std::size_t> I);
  static FamilyDescriptor v2(std::size_t n, std::vector<std::size_t> I);
  static FamilyDescriptor vee(FamilyDescriptor a, FamilyDescriptor b);
  static FamilyDescriptor g4();
  static FamilyDescriptor g4prime();
  static FamilyDescriptor fdelta(std::int64_t delta);
  static FamilyDescriptor gdelta(std::int64_t delta);
  static FamilyDescriptor w1star(std::size_t n, std::size_t p, FamilyDescriptor f);
  static FamilyDescriptor w2(std::size_t n, std::size_t p, FamilyDescriptor f);
  static FamilyDescriptor hchar2();
  static FamilyDescriptor loewy_radwan(std::size_t n, std::size_t k);

  /// Text syntax, e.g. `v1star:n=5,I=1,3`, `vee:(fdelta:d=1)|(gdelta:d=0)`,
  /// `w2:n=6,p=1,F=fdelta:d=2`, `h4`, `g4p`, `lr:n=5,k=3`.
  /// BadDescriptor on malformed input.
  static FamilyDescriptor parse(std::string_view text);
  std::string to_string() const;

  /// Matrix size of the built space.
  std::size_t size() const;
};

/// Builds the family in canonical form. BadParameters when the parameters
/// leave their domain, CharMismatch for the characteristic-specific families.
MatSpace build(const FamilyDescriptor& desc, const Field& field);

/// Block upper-triangular space with diagonal blocks from a and b.
MatSpace vee(const MatSpace& a, const MatSpace& b);
/// K I_n + v.
MatSpace with_scalars(const MatSpace& v);

enum class ReducedLevel { Semi, Well, Fully };

/// 4-dimensional 1-bar-spec subspace of M_3 (char 3) whose every nonzero
/// vector x has dim Vx >= 2, i.e. not similar to K I_3 + NT_3.
/// CharMismatch outside characteristic 3, DimensionMismatch unless n = 3.
bool is_exceptional(const MatSpace& f, const ExecConfig& config = {});

/// Template-membership predicates for exceptional spaces; false for spaces
/// that are not exceptional. Fully compares against F_delta and G_delta for
/// every delta in K (BudgetExceeded above config.survey_limit elements).
bool reduced_form(const MatSpace& f, ReducedLevel level, const ExecConfig& config = {});

}  // namespace specspace
