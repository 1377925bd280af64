// Copyright 2026 The Authors.
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

#include "basis_relabel/generators.hpp"
#include "basis_relabel/matroid.hpp"
#include "basis_relabel/models.hpp"

namespace {

using namespace basis_relabel;

struct Fixture {
  MatroidHandle matroid;
  ElementSet basis;
};

Fixture make_fixture(int n) {
  Fixture f{graphic_matroid(random_two_connected(n, 17)), {}};
  Rng rng(17);
  f.basis = random_basis(f.matroid, rng);
  return f;
}

void BM_FundamentalGraphSerial(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fundamental_graph_serial(f.matroid, f.basis));
  }
}

void BM_FundamentalGraphParallel(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fundamental_graph(f.matroid, f.basis));
  }
}

void BM_DiameterSerial(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  const FundamentalGraph s = fundamental_graph(f.matroid, f.basis);
  for (auto _ : state) benchmark::DoNotOptimize(diameter_serial(s));
}

void BM_DiameterParallel(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<int>(state.range(0)));
  const FundamentalGraph s = fundamental_graph(f.matroid, f.basis);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(s));
}

BENCHMARK(BM_FundamentalGraphSerial)->RangeMultiplier(4)->Range(32, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FundamentalGraphParallel)->RangeMultiplier(4)->Range(32, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiameterSerial)->RangeMultiplier(4)->Range(32, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiameterParallel)->RangeMultiplier(4)->Range(32, 512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
