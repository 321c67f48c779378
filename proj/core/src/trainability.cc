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

#include "hwp/trainability.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hwp/circuit.h"
#include "hwp/hamiltonian.h"
#include "hwp/haar.h"
#include "hwp/variational.h"

namespace hwp {

namespace {

void CheckSector(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw std::domain_error("variance needs 1 <= k <= n - 1");
  }
}

SubspaceOperator ProjectedZ0(const BasisPtr& basis) {
  PauliHamiltonian z(basis->num_qubits());
  z.Add(1.0, PauliWord::Single('Z', 0));
  return ProjectPauli(z, basis);
}

}  // namespace

VarianceFormulas TheoreticalVariance(int n, int k) {
  CheckSector(n, k);
  const double d = static_cast<double>(Dimension(n, k));
  if (d < 2.0) throw std::domain_error("sector dimension must exceed 1");
  const double nn = n, kk = k;
  const double pre = 16.0 * kk * kk * (nn - kk) * (nn - kk);
  VarianceFormulas f;
  f.exact = pre * d * d /
            ((d + 1.0) * nn * nn * nn * (nn - 1.0) * (d * d - 1.0));
  f.approx = pre / (nn * nn * nn * nn * d);
  return f;
}

ProbeGate ParseProbeGate(std::string_view text) {
  if (text == "normalized") return ProbeGate::kNormalized;
  if (text == "bs") return ProbeGate::kBs;
  throw std::invalid_argument("unknown probe '" + std::string(text) +
                              "' (expected normalized or bs)");
}

std::string ProbeGateName(ProbeGate p) {
  return p == ProbeGate::kNormalized ? "normalized" : "bs";
}

HwpCoefficients ProbeCoefficients(ProbeGate p) {
  if (p == ProbeGate::kBs) return Gate::BsCoefficients();
  const double x = 1.0 / std::numbers::sqrt2;
  return {x, x, 0.0, 0.0};
}

TraceValues ComputeTraces(int n, int k, ProbeGate probe) {
  CheckSector(n, k);
  const BasisPtr basis = SubspaceBasis::Make(n, k);
  const Eigen::MatrixXcd o = ProjectedZ0(basis).Dense();
  const Eigen::MatrixXcd h =
      EmbedGenerator(*basis, ProbeCoefficients(probe), 0, 1);
  TraceValues t;
  t.tr_o = o.trace().real();
  t.tr_o2 = (o * o).trace().real();
  t.tr_h2 = (h * h).trace().real();
  t.tr_h = h.trace().real();
  return t;
}

TraceValues ExpectedTraces(int n, int k) {
  CheckSector(n, k);
  const double d = static_cast<double>(Dimension(n, k));
  TraceValues t;
  t.tr_o = d * (n - 2.0 * k) / n;
  t.tr_o2 = d;
  t.tr_h2 = 2.0 * k * (n - k) * d / (static_cast<double>(n) * (n - 1.0));
  return t;
}

double HaarVariance(int n, int k, const TraceValues& t) {
  const double d = static_cast<double>(Dimension(n, k));
  const double h = t.tr_h2 - t.tr_h * t.tr_h / d;
  const double o = d * t.tr_o2 - t.tr_o * t.tr_o;
  return 2.0 * h * o / ((d * d - 1.0) * d * (d + 1.0));
}

VarianceReport SampleGradientVariance(const VarianceConfig& cfg) {
  CheckSector(cfg.n, cfg.k);
  if (cfg.depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (cfg.samples < 2) throw std::invalid_argument("samples must be >= 2");
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");

  const BasisPtr basis = SubspaceBasis::Make(cfg.n, cfg.k);
  AnsatzSpec spec;
  spec.kind = AnsatzKind::kBs;
  spec.topology = Topology::kFullyConnected;
  spec.layers = cfg.depth;
  const Circuit layered = BuildAnsatz(spec, basis);
  const std::size_t probe = layered.num_gates() / 2;
  Circuit c(basis, layered.num_params());
  for (std::size_t i = 0; i < layered.num_gates(); ++i) {
    GateInstance g = layered.gate(i);
    if (i == probe && cfg.probe == ProbeGate::kNormalized) {
      g.gate = Gate::Custom(ProbeCoefficients(cfg.probe));
    }
    c.Add(g);
  }
  const SubspaceOperator obs = ProjectedZ0(basis);
  const Index d = basis->dim();

  auto derivative = [&](int sample) {
    std::mt19937_64 rng = MakeRng(cfg.seed, static_cast<std::uint64_t>(sample));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<double> theta(static_cast<std::size_t>(c.num_params()));
    for (double& t : theta) t = angle(rng);
    auto block = [&](std::size_t i) {
      const GateInstance& g = c.gate(i);
      return g.gate.BlockUnitary(theta[static_cast<std::size_t>(g.param_slot)]);
    };
    auto phase = [&](std::size_t i) {
      const GateInstance& g = c.gate(i);
      return g.gate.PhaseOn11(theta[static_cast<std::size_t>(g.param_slot)]);
    };
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(d);
    phi(0) = 1.0;
    for (std::size_t i = 0; i <= probe; ++i) {
      ApplyBlock(c.table(i), block(i), phase(i), phi.data(), d, 1);
    }
    Eigen::VectorXcd chi = phi;
    for (std::size_t i = probe + 1; i < c.num_gates(); ++i) {
      ApplyBlock(c.table(i), block(i), phase(i), chi.data(), d, 1);
    }
    Eigen::VectorXcd lam = obs.Apply(chi);
    for (std::size_t i = c.num_gates(); i-- > probe + 1;) {
      ApplyBlock(c.table(i), block(i).adjoint(), std::conj(phase(i)),
                 lam.data(), d, 1);
    }
    const Complex ov = GeneratorOverlap(c, probe, lam.data(), phi.data(), 1);
    return 2.0 * (Complex(0.0, 1.0) * ov).real();
  };

  std::vector<double> values(static_cast<std::size_t>(cfg.samples));
  auto worker = [&](int first, int stride) {
    for (int s = first; s < cfg.samples; s += stride) {
      values[static_cast<std::size_t>(s)] = derivative(s);
    }
  };
  if (cfg.jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < cfg.jobs; ++j) pool.emplace_back(worker, j, cfg.jobs);
    for (auto& t : pool) t.join();
  }

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= cfg.samples;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);

  VarianceReport r;
  r.config = cfg;
  r.mean = mean;
  r.empirical_var = ss / (cfg.samples - 1);
  r.mean_stderr = std::sqrt(r.empirical_var / cfg.samples);
  const VarianceFormulas f = TheoreticalVariance(cfg.n, cfg.k);
  r.exact_formula = f.exact;
  r.approx_formula = f.approx;
  r.haar_formula = HaarVariance(cfg.n, cfg.k, ComputeTraces(cfg.n, cfg.k, cfg.probe));
  r.ratio = r.empirical_var / r.exact_formula;
  r.num_gates = static_cast<int>(c.num_gates());
  r.probe_index = static_cast<int>(probe);
  return r;
}

}  // namespace hwp
