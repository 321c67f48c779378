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

#include "hwp/lie.h"

namespace hwp {
namespace {

// Closure of the BS coefficients on the fully connected layout.
void BM_DlaBs(benchmark::State& state) {
  const BasisPtr b = SubspaceBasis::Make(static_cast<int>(state.range(0)),
                                         static_cast<int>(state.range(1)));
  const GeneratorSet gs = GeneratorsFromCoefficients(
      b, Gate::BsCoefficients(), Topology::kFullyConnected);
  for (auto _ : state) benchmark::DoNotOptimize(DlaDimension(gs).dim);
}
BENCHMARK(BM_DlaBs)->Args({5, 2})->Args({6, 2})->Args({6, 3})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hwp
