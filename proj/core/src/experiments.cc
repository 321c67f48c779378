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

#include "hwp/experiments.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "hwp/haar.h"
#include "hwp/variational.h"

#ifndef HWP_VERSION_STRING
#define HWP_VERSION_STRING "unknown"
#endif

namespace hwp {

const char* Version() { return HWP_VERSION_STRING; }

void ParallelFor(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

double Median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// ---- dla -------------------------------------------------------------------

namespace {

bool ParseFlagString(std::string_view text, CoefficientFlags* out) {
  CoefficientFlags f;
  for (char c : text) {
    switch (c) {
      case 'r': f.r = true; break;
      case 'j': f.j = true; break;
      case 'e': f.e = true; break;
      case 's': f.s = true; break;
      case '+': case ',': break;
      default: return false;
    }
  }
  if (!f.any()) return false;
  *out = f;
  return true;
}

}  // namespace

std::vector<DlaCase> DlaCasesFor(std::string_view gate) {
  if (gate == "all") {
    std::vector<DlaCase> out;
    for (const auto& f : AllConfigurations()) out.push_back({f.Label(), f.Unit()});
    return out;
  }
  if (gate == "bs" || gate == "gr" || gate == "xy") {
    return {{std::string(gate), Gate::FromName(gate).coefficients()}};
  }
  if (gate.starts_with("custom:")) {
    std::string body(gate.substr(7));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    HwpCoefficients c;
    if (!(in >> c.r >> c.j >> c.e >> c.s) || !(in >> std::ws).eof()) {
      throw std::invalid_argument("custom gate needs four numbers r,j,e,s");
    }
    if (c.IsZero()) throw std::invalid_argument("custom gate is all zero");
    return {{std::string(gate), c}};
  }
  CoefficientFlags f;
  if (ParseFlagString(gate, &f)) return {{f.Label(), f.Unit()}};
  throw std::invalid_argument("unknown gate selection '" + std::string(gate) +
                              "'");
}

std::vector<std::pair<int, int>> SectorGrid(const std::vector<int>& ns,
                                            const std::vector<int>& ks) {
  std::vector<std::pair<int, int>> out;
  for (int n : ns) {
    if (ks.empty()) {
      for (int k = 1; 2 * k <= n; ++k) out.emplace_back(n, k);
    } else {
      for (int k : ks) {
        if (k >= 0 && k <= n) out.emplace_back(n, k);
      }
    }
  }
  return out;
}

std::vector<DlaRow> RunDla(const DlaConfig& config) {
  std::vector<DlaRow> rows;
  for (auto [n, k] : config.sectors) {
    for (const DlaCase& c : config.cases) {
      DlaRow r;
      r.dla_case = c;
      r.topology = config.topology;
      r.n = n;
      r.k = k;
      rows.push_back(r);
    }
  }
  ParallelFor(static_cast<int>(rows.size()), config.jobs, [&](int i) {
    DlaRow& r = rows[static_cast<std::size_t>(i)];
    const auto t0 = std::chrono::steady_clock::now();
    const BasisPtr basis = SubspaceBasis::Make(r.n, r.k);
    r.d = basis->dim();
    const GeneratorSet gs = GeneratorsFromCoefficients(
        basis, r.dla_case.coefficients, r.topology);
    r.computed = DlaDimension(gs, config.tol).dim;
    r.universal = r.computed == r.d * r.d;
    r.universal_predicted = IsUniversal(r.dla_case.coefficients, r.topology);
    try {
      r.predicted = PredictedDimension(
          CoefficientFlags::Of(r.dla_case.coefficients), r.n, r.k, r.topology);
      r.supported = true;
      r.match = r.predicted == r.computed;
    } catch (const UnsupportedCase&) {
      r.supported = false;
    } catch (const std::domain_error&) {
      r.supported = false;
    }
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  });
  return rows;
}

// ---- approx ----------------------------------------------------------------

ApproxReport RunApprox(const ApproxConfig& config) {
  if (config.gate == AnsatzKind::kEhv) {
    throw std::invalid_argument("unitary approximation uses bs or gr gates");
  }
  if (config.targets < 1) throw std::invalid_argument("targets must be >= 1");
  ApproxReport rep;
  rep.config = config;
  const BasisPtr basis = SubspaceBasis::Make(config.n, config.k);
  rep.d = basis->dim();
  std::vector<int> counts = config.param_counts;
  if (counts.empty()) counts.push_back(static_cast<int>(2 * rep.d * rep.d));
  rep.config.param_counts = counts;

  std::vector<Eigen::MatrixXcd> targets;
  for (int t = 0; t < config.targets; ++t) {
    std::mt19937_64 rng = MakeRng(config.seed, 1000 + static_cast<std::uint64_t>(t));
    targets.push_back(HaarRandomUnitary(static_cast<int>(rep.d), rng));
  }
  std::vector<Circuit> circuits;
  for (int p : counts) {
    if (p < 1) throw std::invalid_argument("parameter count must be >= 1");
    AnsatzSpec spec;
    spec.kind = config.gate;
    spec.topology = config.topology;
    spec.num_params = p;
    circuits.push_back(BuildAnsatz(spec, basis));
  }
  for (std::size_t ci = 0; ci < counts.size(); ++ci) {
    for (int t = 0; t < config.targets; ++t) {
      ApproxTrial trial;
      trial.param_count = counts[ci];
      trial.target = t;
      trial.seed = config.seed + static_cast<std::uint64_t>(t);
      rep.trials.push_back(trial);
    }
  }
  ParallelFor(static_cast<int>(rep.trials.size()), config.jobs, [&](int i) {
    ApproxTrial& trial = rep.trials[static_cast<std::size_t>(i)];
    const std::size_t ci = static_cast<std::size_t>(i / config.targets);
    UnitaryApproxObjective f(circuits[ci],
                             targets[static_cast<std::size_t>(trial.target)]);
    trial.result = Optimize(f, config.optimizer, trial.seed);
  });
  for (std::size_t ci = 0; ci < counts.size(); ++ci) {
    std::vector<double> losses;
    for (const auto& trial : rep.trials) {
      if (trial.param_count == counts[ci]) {
        losses.push_back(trial.result.final_loss);
      }
    }
    ApproxPoint p;
    p.param_count = counts[ci];
    p.median_loss = Median(losses);
    p.min_loss = *std::min_element(losses.begin(), losses.end());
    p.max_loss = *std::max_element(losses.begin(), losses.end());
    rep.sweep.push_back(p);
  }
  return rep;
}

// ---- vqe -------------------------------------------------------------------

double NoninteractingSectorEnergy(const LatticeSpec& spec, int k) {
  const int sites = spec.num_sites();
  double best = std::numeric_limits<double>::infinity();
  for (int up = 0; up <= std::min(k, sites); ++up) {
    const int down = k - up;
    if (down < 0 || down > sites) continue;
    best = std::min(best, NoninteractingEnergy(spec, up, down));
  }
  if (!std::isfinite(best)) throw std::domain_error("occupation out of range");
  return best;
}

VqeReport RunVqe(const VqeConfig& config) {
  if (config.seeds < 1) throw std::invalid_argument("seeds must be >= 1");
  VqeReport rep;
  rep.config = config;
  const bool from_file = !config.pauli_file.empty();
  PauliHamiltonian h;
  if (from_file) {
    h = ParsePauliFile(config.pauli_file);
    if (config.ansatz.kind == AnsatzKind::kEhv) {
      throw std::invalid_argument("EHV needs a lattice, not a Pauli file");
    }
    if (config.k < 0) {
      throw std::invalid_argument("occupation k is required with a Pauli file");
    }
  } else {
    config.lattice.Validate();
    h = FermiHubbardPauli(config.lattice);
  }
  rep.n = from_file ? h.num_qubits() : config.lattice.num_qubits();
  rep.k = config.k >= 0 ? config.k : config.lattice.num_sites();
  rep.config.k = rep.k;
  if (rep.k > rep.n) throw std::domain_error("occupation exceeds qubit count");
  const BasisPtr basis = SubspaceBasis::Make(rep.n, rep.k);
  rep.d = basis->dim();
  const SubspaceOperator op = ProjectPauli(h, basis);
  rep.exact_energy = ExactGroundState(op).energy;
  if (!from_file) {
    rep.has_noninteracting = true;
    rep.noninteracting_energy =
        NoninteractingSectorEnergy(config.lattice, rep.k);
  }

  const Bitstring init_bits =
      from_file ? (rep.k == 0 ? Bitstring{0} : (Bitstring{1} << rep.k) - 1)
                : HartreeFockBitstring(config.lattice, rep.k);
  rep.init_bitstring = FormatBitstring(init_bits, rep.n);
  const SubspaceState init = SubspaceState::BasisState(basis, init_bits);

  AnsatzSpec spec = config.ansatz;
  spec.lattice = config.lattice;
  const Circuit circuit = BuildAnsatz(spec, basis);
  rep.num_params = circuit.num_params();

  OptimizerConfig opt = config.optimizer;
  opt.loss_offset = rep.exact_energy;
  rep.trials.resize(static_cast<std::size_t>(config.seeds));
  ParallelFor(config.seeds, config.jobs, [&](int s) {
    VqeTrial& trial = rep.trials[static_cast<std::size_t>(s)];
    trial.seed = config.seed + static_cast<std::uint64_t>(s);
    VqeObjective f(circuit, op, init);
    trial.result = Optimize(f, opt, trial.seed);
    trial.energy = trial.result.final_loss;
    trial.error = trial.energy - rep.exact_energy;
  });
  std::vector<double> errors;
  for (const auto& t : rep.trials) errors.push_back(t.error);
  rep.best_error = *std::min_element(errors.begin(), errors.end());
  rep.median_error = Median(errors);
  return rep;
}

// ---- variance --------------------------------------------------------------

std::vector<VarianceReport> RunVariance(
    const std::vector<std::pair<int, int>>& sectors,
    const VarianceConfig& base) {
  std::vector<VarianceReport> out;
  for (auto [n, k] : sectors) {
    VarianceConfig c = base;
    c.n = n;
    c.k = k;
    out.push_back(SampleGradientVariance(c));
  }
  return out;
}

}  // namespace hwp
