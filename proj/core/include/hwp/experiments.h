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

// Batch experiment drivers shared by the command line tool and the
// acceptance suite. Every driver is deterministic for a fixed config: each
// trial draws from its own (seed, stream) generator and results are stored
// by index, so `jobs` only changes wall time.

#ifndef HWP_EXPERIMENTS_H_
#define HWP_EXPERIMENTS_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hwp/circuit.h"
#include "hwp/hamiltonian.h"
#include "hwp/lie.h"
#include "hwp/optimizer.h"
#include "hwp/trainability.h"

namespace hwp {

const char* Version();

// Runs fn(0..count-1) on up to `jobs` threads.
void ParallelFor(int count, int jobs, const std::function<void(int)>& fn);

double Median(std::vector<double> values);

// ---- dla -------------------------------------------------------------------

struct DlaCase {
  std::string label;
  HwpCoefficients coefficients;
};

// "all" (the fifteen unit configurations), "bs", "gr", "xy", a flag string
// such as "r+e" or "je", or "custom:r,j,e,s". Throws std::invalid_argument.
std::vector<DlaCase> DlaCasesFor(std::string_view gate);

// Every (n, k) with n in `ns` and k in `ks`; an empty `ks` means
// 1 <= k <= n / 2.
std::vector<std::pair<int, int>> SectorGrid(const std::vector<int>& ns,
                                            const std::vector<int>& ks);

struct DlaConfig {
  std::vector<DlaCase> cases;
  std::vector<std::pair<int, int>> sectors;
  Topology topology = Topology::kFullyConnected;
  double tol = kDefaultDlaTolerance;
  int jobs = 1;
};

struct DlaRow {
  DlaCase dla_case;
  Topology topology = Topology::kFullyConnected;
  int n = 0;
  int k = 0;
  std::int64_t d = 0;
  std::int64_t computed = 0;
  std::int64_t predicted = -1;  // -1 when no closed form applies
  bool supported = false;
  bool match = true;            // vacuously true when unsupported
  bool universal = false;       // computed == d^2
  bool universal_predicted = false;  // IsUniversal() for the coefficients
  double seconds = 0.0;
};

std::vector<DlaRow> RunDla(const DlaConfig& config);

// ---- approx ----------------------------------------------------------------

struct ApproxConfig {
  int n = 5;
  int k = 1;
  AnsatzKind gate = AnsatzKind::kBs;
  Topology topology = Topology::kNearestNeighborRing;
  int targets = 10;
  std::vector<int> param_counts;  // empty means {2 d^2}
  OptimizerConfig optimizer;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct ApproxTrial {
  int param_count = 0;
  int target = 0;
  std::uint64_t seed = 0;
  TrainResult result;
};

struct ApproxPoint {
  int param_count = 0;
  double median_loss = 0.0;
  double min_loss = 0.0;
  double max_loss = 0.0;
};

struct ApproxReport {
  ApproxConfig config;
  std::int64_t d = 0;
  std::vector<ApproxTrial> trials;
  std::vector<ApproxPoint> sweep;
};

// Target t is Haar-random from stream (seed, 1000 + t), identical across
// parameter counts; its training run starts from seed + t. Throws
// std::invalid_argument for GR/BS mismatches such as EHV.
ApproxReport RunApprox(const ApproxConfig& config);

// ---- vqe -------------------------------------------------------------------

struct VqeConfig {
  // Either a lattice (default) or a Pauli file.
  LatticeSpec lattice;
  std::string pauli_file;
  int k = -1;  // occupation; -1 means half filling for lattices
  AnsatzSpec ansatz;
  int seeds = 5;
  std::uint64_t seed = 0;
  OptimizerConfig optimizer;
  int jobs = 1;
};

struct VqeTrial {
  std::uint64_t seed = 0;
  double energy = 0.0;
  double error = 0.0;
  TrainResult result;
};

struct VqeReport {
  VqeConfig config;
  int n = 0;
  int k = 0;
  std::int64_t d = 0;
  int num_params = 0;
  std::string init_bitstring;
  double exact_energy = 0.0;
  // For lattices: min over spin splits of the one-body energy (the exact
  // answer when U = 0).
  bool has_noninteracting = false;
  double noninteracting_energy = 0.0;
  std::vector<VqeTrial> trials;
  double best_error = 0.0;
  double median_error = 0.0;
};

// Lattice input starts from the spin-split reference state; Pauli-file input
// starts from the lowest k qubits occupied. The optimizer's loss offset is
// set to the exact energy so target_loss is an energy error. Throws
// NotNumberConserving for Pauli files that mix sectors.
VqeReport RunVqe(const VqeConfig& config);

// Min over n_up + n_down = k of NoninteractingEnergy.
double NoninteractingSectorEnergy(const LatticeSpec& spec, int k);

// ---- variance --------------------------------------------------------------

std::vector<VarianceReport> RunVariance(
    const std::vector<std::pair<int, int>>& sectors,
    const VarianceConfig& base);

}  // namespace hwp

#endif  // HWP_EXPERIMENTS_H_
