// Copyright 2026 The berkram Authors
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

#include "berkram/errors.hpp"
#include "berkram/mult.hpp"
#include "berkram/parse.hpp"
#include "berkram/ramlocus.hpp"

namespace berkram {
namespace {

const char* const kMaps[] = {"z^2 + t", "(z^3+1)/z", "(z^4 - t*z + 1)/(z^2 - t^2)",
                             "(z^5 + t*z^3 - z + t^-1)/(z^2 + 1)"};

FieldPtr field_arg(int64_t mode) {
  switch (mode) {
    case 0: return GroundField::equichar_zero();
    case 1: return GroundField::equichar_p(7);
    default: return GroundField::mixed(7, 1);
  }
}

std::string in_mode(const char* map, int64_t mode) {
  std::string s = map;
  if (mode == 2) {
    for (auto& ch : s) {
      if (ch == 't') ch = 'p';
    }
  }
  return s;
}

void BM_LocalDegree(benchmark::State& state) {
  auto F = field_arg(state.range(1));
  auto phi = parse_map(F, in_mode(kMaps[state.range(0)], state.range(1)));
  auto x = parse_point(F, "zeta(1; ord=1)");
  for (auto _ : state) benchmark::DoNotOptimize(local_degree(phi, x));
}
BENCHMARK(BM_LocalDegree)->ArgsProduct({{0, 1, 2, 3}, {0, 1, 2}});

void BM_Oracle(benchmark::State& state) {
  auto F = field_arg(state.range(1));
  auto phi = parse_map(F, in_mode(kMaps[state.range(0)], state.range(1)));
  auto x = parse_point(F, "zeta(1; ord=1)");
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(local_degree_oracle(phi, x));
    } catch (const Error&) {
    }
  }
}
BENCHMARK(BM_Oracle)->ArgsProduct({{0, 1, 2, 3}, {0, 1, 2}});

void BM_DirectionalData(benchmark::State& state) {
  auto F = field_arg(state.range(1));
  auto phi = parse_map(F, in_mode(kMaps[state.range(0)], state.range(1)));
  auto x = BerkPoint::gauss(F);
  for (auto _ : state) benchmark::DoNotOptimize(directional_data(phi, x));
}
BENCHMARK(BM_DirectionalData)->ArgsProduct({{0, 1, 2, 3}, {0, 1, 2}});

void BM_HurwitzSum(benchmark::State& state) {
  auto F = field_arg(state.range(1));
  auto phi = parse_map(F, in_mode(kMaps[state.range(0)], state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_sum(phi));
}
BENCHMARK(BM_HurwitzSum)->ArgsProduct({{0, 1, 2, 3}, {0, 1, 2}});

void BM_CriticalPoints(benchmark::State& state) {
  auto F = field_arg(0);
  auto phi = parse_map(F, kMaps[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(critical_points(phi));
}
BENCHMARK(BM_CriticalPoints)->DenseRange(0, 3);

void BM_RamComponentsGenerator(benchmark::State& state) {
  auto E = GroundField::equichar_zero();
  auto phi = generate_n_component_example(static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(1)), E);
  for (auto _ : state) benchmark::DoNotOptimize(ram_components(phi));
  state.SetLabel(phi.to_string());
}
BENCHMARK(BM_RamComponentsGenerator)
    ->Args({1, 3})
    ->Args({2, 3})
    ->Args({2, 5})
    ->Args({4, 5})
    ->Args({5, 6})
    ->Unit(benchmark::kMillisecond);

void BM_TotalRamLocus(benchmark::State& state) {
  auto M5 = GroundField::mixed(5, 1);
  auto phi = parse_map(M5, "(z^6 + 5*z + 1)/z");
  for (auto _ : state) benchmark::DoNotOptimize(total_ram_locus(phi));
}
BENCHMARK(BM_TotalRamLocus)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace berkram

BENCHMARK_MAIN();
