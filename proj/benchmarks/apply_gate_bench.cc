// Copyright 2026 The hwpsim Authors
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

#include "hwp/gates.h"
#include "hwp/subspace.h"

namespace hwp {
namespace {

// One BS gate on a random sector state; args are n and k.
void BM_ApplyGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const BasisPtr b = SubspaceBasis::Make(n, k);
  SubspaceState s(b, Eigen::VectorXcd::Random(b->dim()));
  s.Normalize();
  const GateInstance g{Gate::Bs(), 0, n - 1, 0};
  for (auto _ : state) {
    ApplyGate(s, g, 0.3);
    benchmark::DoNotOptimize(s.mutable_amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * b->dim());
}
BENCHMARK(BM_ApplyGate)->Args({8, 4})->Args({12, 6})->Args({16, 8});

void BM_RankUnrank(benchmark::State& state) {
  const SubspaceBasis b(16, 8);
  Index i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(b.Rank(b.Unrank(i)));
    i = (i + 7919) % b.dim();
  }
}
BENCHMARK(BM_RankUnrank);

}  // namespace
}  // namespace hwp
