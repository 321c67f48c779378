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

// Gradient variance of a sector observable under deep random circuits, and
// the closed forms it is compared with.
//
// The cost is C = <psi| U^dagger O U |psi> with O the sector restriction of
// Z_0 and psi the first basis state of the sector. U is a BS circuit on the
// fully connected layout with parameters drawn uniformly from [0, 2 pi); the
// derivative is taken with respect to the middle gate (the probe).

#ifndef HWP_TRAINABILITY_H_
#define HWP_TRAINABILITY_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "hwp/gates.h"

namespace hwp {

struct VarianceFormulas {
  // 16 k^2 (n-k)^2 d^2 / ((d+1) n^3 (n-1) (d^2-1))
  double exact = 0.0;
  // 16 k^2 (n-k)^2 / (n^4 d)
  double approx = 0.0;
};

// Requires 1 <= k <= n - 1 and d > 1.
VarianceFormulas TheoreticalVariance(int n, int k);

// Generator of the differentiated gate.
//   kNormalized: (R + J) / sqrt(2), the BS direction with unit Pauli weight,
//                whose square is the identity on the exchange block.
//   kBs:         the BS generator itself.
enum class ProbeGate { kNormalized, kBs };

ProbeGate ParseProbeGate(std::string_view text);  // "normalized" / "bs"
std::string ProbeGateName(ProbeGate p);
HwpCoefficients ProbeCoefficients(ProbeGate p);

struct TraceValues {
  double tr_o = 0.0;    // Tr(O)
  double tr_o2 = 0.0;   // Tr(O^2)
  double tr_h2 = 0.0;   // Tr(H^2), probe generator on qubits (0, 1)
  double tr_h = 0.0;    // Tr(H)
};

// Traces computed from the sector matrices.
TraceValues ComputeTraces(int n, int k, ProbeGate probe = ProbeGate::kNormalized);
// d (n - 2k) / n, d, 2 k (n - k) d / (n (n - 1)); tr_h is left at 0.
TraceValues ExpectedTraces(int n, int k);

// Haar-limit variance for a pure input state, written in terms of traces:
//   2 (Tr(H^2) - Tr(H)^2 / d) (d Tr(O^2) - Tr(O)^2) / ((d^2 - 1) d (d + 1)).
// Equals VarianceFormulas::exact when the probe is kNormalized.
double HaarVariance(int n, int k, const TraceValues& t);

struct VarianceConfig {
  int n = 4;
  int k = 1;
  int depth = 100;
  int samples = 2000;
  std::uint64_t seed = 0;
  ProbeGate probe = ProbeGate::kNormalized;
  int jobs = 1;
};

struct VarianceReport {
  VarianceConfig config;
  double mean = 0.0;
  double mean_stderr = 0.0;
  double empirical_var = 0.0;
  double exact_formula = 0.0;
  double approx_formula = 0.0;
  double haar_formula = 0.0;  // HaarVariance for the probe in use
  double ratio = 0.0;         // empirical_var / exact_formula
  int num_gates = 0;
  int probe_index = 0;
};

// Throws std::invalid_argument for depth < 1, samples < 2 or jobs < 1.
VarianceReport SampleGradientVariance(const VarianceConfig& config);

}  // namespace hwp

#endif  // HWP_TRAINABILITY_H_
