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

#include <benchmark/benchmark.h>

#include "specspace/families.hpp"
#include "specspace/probe.hpp"
#include "specspace/rng.hpp"
#include "specspace/search.hpp"

namespace {

using namespace specspace;
using FD = FamilyDescriptor;

Mat random_matrix(const Field& f, std::size_t n, Rng& rng) {
  Mat m(f, n);
  for (auto& e : m.entries()) e = f.element(rng.below(f.order()));
  return m;
}

// args: n, q
void BM_Charpoly(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint64_t>(state.range(1)));
  Rng rng(1);
  const Mat m = random_matrix(f, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(m.charpoly());
}
BENCHMARK(BM_Charpoly)->Args({3, 3})->Args({4, 4})->Args({6, 5})->Args({8, 9});

void BM_CharpolyWorkspace(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint64_t>(state.range(1)));
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const Mat m = random_matrix(f, n, rng);
  linalg::CharpolyWorkspace ws(f, n);
  std::vector<Fe> out(n + 1);
  for (auto _ : state) {
    ws.compute(m.entries(), out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_CharpolyWorkspace)->Args({3, 3})->Args({4, 4})->Args({6, 5})->Args({8, 9});

void BM_CountEigsClosure(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint64_t>(state.range(1)));
  Rng rng(2);
  const Poly p = random_matrix(f, static_cast<std::size_t>(state.range(0)), rng).charpoly();
  const SpectrumQuery q{2, Location::Closure, false};
  for (auto _ : state) benchmark::DoNotOptimize(count_eigs(p, q));
}
BENCHMARK(BM_CountEigsClosure)->Args({3, 3})->Args({4, 4})->Args({6, 5});

void BM_CheckSpecV2(benchmark::State& state) {
  const Field f = Field::of_order(static_cast<std::uint64_t>(state.range(1)));
  const MatSpace v = build(FD::v2(static_cast<std::size_t>(state.range(0)), {1}), f);
  const SpectrumQuery q{2, Location::Closure, false};
  for (auto _ : state) benchmark::DoNotOptimize(check_spec(v, q, CheckMode::exhaustive()));
  state.counters["members"] = static_cast<double>(check_spec(v, q, CheckMode::exhaustive()).members_total);
}
BENCHMARK(BM_CheckSpecV2)->Args({3, 3})->Args({3, 5})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_CheckSpecSl2Sl2(benchmark::State& state) {
  const MatSpace v = build(FD::vee(FD::sl(2), FD::sl(2)), Field::of_order(4));
  const SpectrumQuery q{2, Location::Closure, false};
  for (auto _ : state) benchmark::DoNotOptimize(check_spec(v, q, CheckMode::exhaustive()));
}
BENCHMARK(BM_CheckSpecSl2Sl2)->Unit(benchmark::kMillisecond);

void BM_CanonicalSpan(benchmark::State& state) {
  const Field f = Field::of_order(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < n * n / 2; ++i) gens.push_back(random_matrix(f, n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(MatSpace::from_matrices(gens));
}
BENCHMARK(BM_CanonicalSpan)->Arg(3)->Arg(5)->Arg(8);

void BM_GoodVectorSurvey(benchmark::State& state) {
  const MatSpace v = build(FD::v2(4, {1, 2}), Field::of_order(5));
  for (auto _ : state) benchmark::DoNotOptimize(good_vector_survey(v));
}
BENCHMARK(BM_GoodVectorSurvey)->Unit(benchmark::kMillisecond);

void BM_InvariantBattery(benchmark::State& state) {
  const MatSpace v = build(FD::fdelta(1), Field::of_order(3));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_battery(v));
}
BENCHMARK(BM_InvariantBattery)->Unit(benchmark::kMillisecond);

void BM_Grow(benchmark::State& state) {
  const MatSpace seed = build(FD::nt(3), Field::of_order(4));
  GrowOptions opt;
  opt.budget = static_cast<std::uint64_t>(state.range(0));
  opt.rng_seed = 5;
  const SpectrumQuery q{1, Location::Closure, true};
  for (auto _ : state) benchmark::DoNotOptimize(grow(seed, q, opt));
}
BENCHMARK(BM_Grow)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
