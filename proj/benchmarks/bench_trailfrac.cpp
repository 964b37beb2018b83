// Copyright 2026 The trailfrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "trailfrac/trailfrac.hpp"

using namespace trailfrac;

namespace {

void BM_CountFamily(benchmark::State& state) {
  const auto g = gen_family(static_cast<std::size_t>(state.range(0)));
  const auto lanes = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_trails_exact(g, lanes).d);
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_CountFamily)
    ->ArgsProduct({{12, 16, 20}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_CountRandom(benchmark::State& state) {
  const auto g = gen_random_multigraph(6, static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(count_trails_exact(g, 1).d);
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_CountRandom)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_IsTrail(benchmark::State& state) {
  const auto g = gen_cycle(static_cast<std::size_t>(state.range(0)));
  const auto all = EdgeSubset::all(g.edge_count());
  for (auto _ : state) benchmark::DoNotOptimize(is_trail(g, all).is_trail);
}
BENCHMARK(BM_IsTrail)->RangeMultiplier(4)->Range(4, 1024);

void BM_TrailTesterMask(benchmark::State& state) {
  const auto g = gen_random_multigraph(5, 24, 3);
  TrailTester tester(g);
  std::uint64_t mask = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tester.is_trail(mask));
    mask = (mask + 0x9E3779B97F4A7C15ULL) & ((std::uint64_t{1} << 24) - 1);
  }
}
BENCHMARK(BM_TrailTesterMask);

void BM_Estimate(benchmark::State& state) {
  const auto g = gen_random_multigraph(10, 64, 5);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_trail_fraction(g, samples, 42).hits);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Estimate)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_GreedyEis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = gen_random_multigraph(n, 4 * n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_eis(g).length());
}
BENCHMARK(BM_GreedyEis)->RangeMultiplier(4)->Range(16, 1024);

void BM_FamilyClosedForm(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_family_closed_form(m).total);
}
BENCHMARK(BM_FamilyClosedForm)->Arg(64)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
