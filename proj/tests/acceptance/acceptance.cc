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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
//   hwp_acceptance [--jobs N] [criterion ...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "hwp/circuit.h"
#include "hwp/experiments.h"
#include "hwp/gates.h"
#include "hwp/haar.h"
#include "hwp/hamiltonian.h"
#include "hwp/lie.h"
#include "hwp/optimizer.h"
#include "hwp/subspace.h"
#include "hwp/trainability.h"
#include "hwp/variational.h"
#include "oracle.h"

namespace hwp {
namespace {

int g_jobs = 1;

struct Outcome {
  bool pass = true;
  std::string summary;
};

double Seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string Fmt(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// ---- 1, 2: Lie closure ------------------------------------------------------

Outcome DlaTable() {
  DlaConfig c;
  c.cases = DlaCasesFor("all");
  c.sectors = {{4, 1}, {4, 2}, {5, 1}, {5, 2}, {6, 1}, {6, 2}, {6, 3}};
  c.topology = Topology::kFullyConnected;
  c.jobs = g_jobs;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = RunDla(c);
  const double secs = Seconds(t0);
  int matched = 0;
  for (const auto& r : rows) {
    if (r.supported && r.match) {
      ++matched;
    } else {
      std::printf("  mismatch %s (%d,%d): computed %lld predicted %lld\n",
                  r.dla_case.label.c_str(), r.n, r.k,
                  static_cast<long long>(r.computed),
                  static_cast<long long>(r.predicted));
    }
  }
  const int total = static_cast<int>(rows.size());
  return {matched == total && total == 105 && secs < 300.0,
          Fmt("%d/%d closure dimensions match, %.1f s with jobs=%d", matched,
              total, secs, g_jobs)};
}

Outcome NearestNeighbourBoundary() {
  const HwpCoefficients je{0.0, 1.0, 1.0, 0.0};
  Outcome out;
  for (auto [n, k] : {std::pair{5, 2}, std::pair{4, 2}, std::pair{6, 2},
                      std::pair{6, 3}}) {
    const BasisPtr b = SubspaceBasis::Make(n, k);
    const std::int64_t d = b->dim();
    const std::int64_t want = 2 * k < n ? d * d : d * d / 2 - 1;
    const std::int64_t got =
        DlaDimension(GeneratorsFromCoefficients(
                         b, je, Topology::kNearestNeighborRing))
            .dim;
    out.pass = out.pass && got == want;
    out.summary += Fmt("(%d,%d)=%lld want %lld; ", n, k,
                       static_cast<long long>(got),
                       static_cast<long long>(want));
  }
  return out;
}

// ---- 3, 4: unitary approximation ---------------------------------------------

OptimizerConfig ApproxOptimizer() {
  OptimizerConfig o;
  o.max_iters = 3000;
  o.target_loss = 1e-12;
  return o;
}

Outcome UnitaryApproximation() {
  Outcome out;
  for (auto [n, k] : {std::pair{5, 1}, std::pair{5, 2}}) {
    for (AnsatzKind gate : {AnsatzKind::kBs, AnsatzKind::kGr}) {
      for (Topology topo :
           {Topology::kNearestNeighborRing, Topology::kFullyConnected}) {
        ApproxConfig c;
        c.n = n;
        c.k = k;
        c.gate = gate;
        c.topology = topo;
        c.targets = 10;
        c.optimizer = ApproxOptimizer();
        c.jobs = g_jobs;
        const auto t0 = std::chrono::steady_clock::now();
        const ApproxReport r = RunApprox(c);
        const double med = r.sweep.front().median_loss;
        const bool ok = gate == AnsatzKind::kBs ? med <= 1e-10 : med >= 1e-2;
        out.pass = out.pass && ok;
        std::printf("  %s-%s d=%lld params=%d median %.3e [%.3e, %.3e] %s "
                    "(%.1f s)\n",
                    AnsatzName(gate).c_str(), TopologyName(topo).c_str(),
                    static_cast<long long>(r.d), r.sweep.front().param_count,
                    med, r.sweep.front().min_loss, r.sweep.front().max_loss,
                    ok ? "ok" : "FAIL", Seconds(t0));
        std::fflush(stdout);
      }
    }
  }
  out.summary = "BS medians <= 1e-10 and GR medians >= 1e-2 at d = 5, 10";
  return out;
}

Outcome OverparameterizationKnee() {
  ApproxConfig c;
  c.n = 5;
  c.k = 1;
  c.gate = AnsatzKind::kBs;
  c.topology = Topology::kNearestNeighborRing;
  c.targets = 10;
  c.param_counts = {10, 15, 20, 25, 35, 50};
  c.optimizer = ApproxOptimizer();
  c.jobs = g_jobs;
  const ApproxReport r = RunApprox(c);
  int knee = -1;
  for (const auto& p : r.sweep) {
    std::printf("  params=%d median %.3e\n", p.param_count, p.median_loss);
    if (knee < 0 && p.median_loss <= 1e-8) knee = p.param_count;
  }
  return {knee >= 15 && knee <= 50,
          Fmt("smallest count with median <= 1e-8 is %d", knee)};
}

// ---- 5, 6: Hubbard ---------------------------------------------------------

VqeReport Vqe(int rows, int cols, double u, AnsatzKind kind, int layers) {
  VqeConfig c;
  c.lattice.rows = rows;
  c.lattice.cols = cols;
  c.lattice.t = 1.0;
  c.lattice.u = u;
  c.ansatz.kind = kind;
  c.ansatz.topology = Topology::kNearestNeighborRing;
  c.ansatz.layers = layers;
  c.seeds = 5;
  c.optimizer.max_iters = 2000;
  c.optimizer.target_loss = 1e-12;
  c.jobs = g_jobs;
  const auto t0 = std::chrono::steady_clock::now();
  VqeReport r = RunVqe(c);
  std::printf("  %dx%d U=%g %s L=%d params=%d: exact %.10f best %.3e "
              "median %.3e (%.1f s)\n",
              rows, cols, u, AnsatzName(kind).c_str(), layers, r.num_params,
              r.exact_energy, r.best_error, r.median_error, Seconds(t0));
  std::fflush(stdout);
  return r;
}

Outcome HubbardVqe() {
  Outcome out;
  const VqeReport deep = Vqe(1, 4, 4.0, AnsatzKind::kBs, 100);
  const bool deep_ok = deep.best_error <= 1e-8;
  const VqeReport bs5 = Vqe(1, 4, 4.0, AnsatzKind::kBs, 5);
  const VqeReport ehv5 = Vqe(1, 4, 4.0, AnsatzKind::kEhv, 5);
  const bool shallow_ok = bs5.median_error < ehv5.median_error;
  int wins = 0, total = 0;
  for (auto [rows, cols] : {std::pair{1, 6}, std::pair{2, 3}}) {
    for (double u : {0.0, 4.0, 8.0}) {
      const VqeReport bs = Vqe(rows, cols, u, AnsatzKind::kBs, 30);
      const VqeReport ehv = Vqe(rows, cols, u, AnsatzKind::kEhv, 30);
      ++total;
      if (bs.median_error < ehv.median_error) ++wins;
    }
  }
  out.pass = deep_ok && shallow_ok && wins == total;
  out.summary = Fmt(
      "1x4 L=100 best %.2e (%s); L=5 BS %.2e vs EHV %.2e (%s); "
      "L=30 BS below EHV in %d/%d",
      deep.best_error, deep_ok ? "ok" : "fail", bs5.median_error,
      ehv5.median_error, shallow_ok ? "ok" : "fail", wins, total);
  return out;
}

Outcome NoninteractingConsistency() {
  double worst = 0.0;
  int cases = 0;
  for (int cols : {2, 3, 4}) {
    LatticeSpec s;
    s.rows = 1;
    s.cols = cols;
    s.u = 0.0;
    const PauliHamiltonian h = FermiHubbardPauli(s);
    const std::vector<double> levels = oracle::OpenChainLevels(cols, s.t);
    for (int k = 0; k <= s.num_qubits(); ++k) {
      const double exact =
          ExactGroundState(ProjectPauli(h, SubspaceBasis::Make(s.num_qubits(), k)))
              .energy;
      // Fill the lowest chain levels, best spin split.
      double one_body = INFINITY;
      for (int up = 0; up <= cols; ++up) {
        const int down = k - up;
        if (down < 0 || down > cols) continue;
        double e = 0.0;
        for (int i = 0; i < up; ++i) e += levels[static_cast<std::size_t>(i)];
        for (int i = 0; i < down; ++i) e += levels[static_cast<std::size_t>(i)];
        one_body = std::min(one_body, e);
      }
      const double library = NoninteractingSectorEnergy(s, k);
      worst = std::max({worst, std::abs(exact - one_body),
                        std::abs(library - one_body)});
      ++cases;
    }
  }
  return {worst <= 1e-10,
          Fmt("%d sectors, max deviation %.2e", cases, worst)};
}

// ---- 7: variance -------------------------------------------------------------

Outcome Variance() {
  Outcome out;
  VarianceConfig base;
  base.samples = 2000;
  base.depth = 100;
  base.seed = 0;
  base.probe = ProbeGate::kNormalized;
  base.jobs = g_jobs;
  bool ratios_ok = true;
  const auto reports = RunVariance({{4, 1}, {5, 2}, {6, 1}, {6, 2}}, base);
  for (const auto& r : reports) {
    const bool ok = r.ratio >= 0.75 && r.ratio <= 1.25;
    ratios_ok = ratios_ok && ok;
    std::printf("  (%d,%d) empirical %.4e exact %.4e ratio %.3f %s\n",
                r.config.n, r.config.k, r.empirical_var, r.exact_formula,
                r.ratio, ok ? "ok" : "FAIL");
  }
  // Traces from full-space matrices restricted to the sector.
  double worst = 0.0;
  const double x = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix4cd probe = Eigen::Matrix4cd::Zero();
  probe(1, 2) = Complex(x, x);
  probe(2, 1) = Complex(x, -x);
  for (int n = 2; n <= 8; ++n) {
    std::string z(static_cast<std::size_t>(n), 'I');
    z.back() = 'Z';  // qubit 0 is the last character
    const oracle::Dense zfull = oracle::PauliKron(z);
    const oracle::Dense hfull = oracle::EmbedTwoQubit(n, probe, 0, 1);
    for (int k = 1; k < n; ++k) {
      const double d = static_cast<double>(Dimension(n, k));
      const oracle::Dense o = oracle::Restrict(zfull, n, k);
      const oracle::Dense h = oracle::Restrict(hfull, n, k);
      const double tr_o = o.trace().real();
      const double tr_o2 = (o * o).trace().real();
      const double tr_h2 = (h * h).trace().real();
      const TraceValues lib = ComputeTraces(n, k, ProbeGate::kNormalized);
      worst = std::max({worst, std::abs(tr_o - d * (n - 2.0 * k) / n),
                        std::abs(tr_o2 - d),
                        std::abs(tr_h2 - 2.0 * k * (n - k) * d / (n * (n - 1.0))),
                        std::abs(lib.tr_o - tr_o), std::abs(lib.tr_o2 - tr_o2),
                        std::abs(lib.tr_h2 - tr_h2)});
    }
  }
  const bool traces_ok = worst <= 1e-10;
  out.pass = ratios_ok && traces_ok;
  out.summary = Fmt("ratios in [0.75, 1.25]: %s; trace identities n <= 8 max "
                    "error %.2e",
                    ratios_ok ? "yes" : "no", worst);
  return out;
}

// ---- 8: property suites ------------------------------------------------------

// exp(i theta H) for a 4x4 Hermitian H, by eigendecomposition.
Eigen::Matrix4cd ExpI(const Eigen::Matrix4cd& h, double theta) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
  Eigen::Vector4cd phases;
  for (int i = 0; i < 4; ++i) {
    phases(i) = std::polar(1.0, theta * es.eigenvalues()(i));
  }
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

Eigen::Matrix4cd TwoQubitHamiltonian(double r, double j, double e, double s) {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(1, 1) = e + s;
  h(2, 2) = e - s;
  h(1, 2) = Complex(r, j);
  h(2, 1) = Complex(r, -j);
  return h;
}

double GateApplicationSuite() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (int c = 0; c < 200; ++c) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int k = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    int q0 = static_cast<int>(rng() % static_cast<unsigned>(n));
    int q1 = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    if (q1 >= q0) ++q1;
    const double theta = 3.0 * unit(rng);
    Gate gate = Gate::Bs();
    Eigen::Matrix4cd h;
    switch (c % 5) {
      case 0:
        h = TwoQubitHamiltonian(0.5 / std::numbers::sqrt2,
                                0.5 / std::numbers::sqrt2, 0.5, 0.0);
        break;
      case 1:
        gate = Gate::Gr();
        h = TwoQubitHamiltonian(0.0, -1.0, 0.0, 0.0);
        break;
      case 2:
        gate = Gate::Xy();
        h = TwoQubitHamiltonian(1.0, 0.0, 0.0, 0.0);
        break;
      case 3:
        gate = Gate::Onsite();
        h = Eigen::Matrix4cd::Zero();
        h(3, 3) = 1.0;
        break;
      default: {
        const double r = unit(rng), j = unit(rng), e = unit(rng), s = unit(rng);
        gate = Gate::Custom({r, j, e, s});
        h = TwoQubitHamiltonian(r, j, e, s);
      }
    }
    const BasisPtr b = SubspaceBasis::Make(n, k);
    const Eigen::VectorXcd v = oracle::RandomState(b->dim(), rng);
    SubspaceState state(b, v);
    ApplyGate(state, {gate, q0, q1, 0}, theta);
    const Eigen::VectorXcd want =
        oracle::Restrict(oracle::EmbedTwoQubit(n, ExpI(h, theta), q0, q1), n,
                         k) *
        v;
    worst = std::max(worst, (state.amplitudes() - want).cwiseAbs().maxCoeff());
  }
  return worst;
}

double GradientSuite() {
  std::mt19937_64 rng(80);
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);
  auto random_theta = [&](int p) {
    Eigen::VectorXd t(p);
    for (int i = 0; i < p; ++i) t(i) = angle(rng);
    return t;
  };
  double worst = 0.0;
  auto check = [&](const Objective& f) {
    const Eigen::VectorXd theta = random_theta(f.num_params());
    const Eigen::VectorXd fd = FiniteDifferenceGradient(f, theta, 1e-5);
    const Eigen::VectorXd an = f.Evaluate(theta).gradient;
    worst = std::max(worst, (an - fd).cwiseAbs().maxCoeff());
  };
  for (int c = 0; c < 10; ++c) {
    const int n = 3 + c % 3;
    const int k = 1 + c % 2;
    const BasisPtr b = SubspaceBasis::Make(n, k);
    AnsatzSpec s;
    s.kind = c % 2 ? AnsatzKind::kGr : AnsatzKind::kBs;
    s.topology = c % 3 ? Topology::kNearestNeighborRing
                       : Topology::kFullyConnected;
    s.layers = 2;
    const Circuit circ = BuildAnsatz(s, b);
    check(UnitaryApproxObjective(circ, HaarRandomUnitary(
                                           static_cast<int>(b->dim()), rng)));
  }
  for (int c = 0; c < 10; ++c) {
    LatticeSpec lat;
    lat.rows = 1;
    lat.cols = 2 + c % 2;
    lat.u = 1.0 + c;
    const int k = lat.num_sites();
    const BasisPtr b = SubspaceBasis::Make(lat.num_qubits(), k);
    const SubspaceOperator op = ProjectPauli(FermiHubbardPauli(lat), b);
    AnsatzSpec s;
    s.kind = c < 4 ? AnsatzKind::kEhv : AnsatzKind::kBs;
    s.layers = 2;
    s.lattice = lat;
    const Circuit circ = BuildAnsatz(s, b);
    check(VqeObjective(circ, op,
                       SubspaceState::BasisState(b, HartreeFockBitstring(lat, k))));
  }
  return worst;
}

double ProjectionSuite() {
  double worst = 0.0;
  for (auto [rows, cols] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}}) {
    for (Boundary bc : {Boundary::kOpen, Boundary::kPeriodic}) {
      LatticeSpec s;
      s.rows = rows;
      s.cols = cols;
      s.t = 0.7;
      s.u = 2.5;
      s.boundary = bc;
      const oracle::Dense full = oracle::HubbardFromFermions(s);
      const PauliHamiltonian h = FermiHubbardPauli(s);
      const int n = s.num_qubits();
      for (int k = 0; k <= n; ++k) {
        const Eigen::VectorXd want =
            oracle::Eigenvalues(oracle::Restrict(full, n, k));
        const Eigen::VectorXd got =
            Spectrum(ProjectPauli(h, SubspaceBasis::Make(n, k)));
        worst = std::max(worst, (want - got).cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

// Largest |mean - 1/d| / standard error over all matrix entries.
double HaarMomentSuite() {
  const int d = 4;
  const int samples = 100000;
  Eigen::ArrayXXd sum = Eigen::ArrayXXd::Zero(d, d);
  Eigen::ArrayXXd sum2 = Eigen::ArrayXXd::Zero(d, d);
  std::mt19937_64 rng = MakeRng(8, 8);
  for (int i = 0; i < samples; ++i) {
    const Eigen::ArrayXXd p = HaarRandomUnitary(d, rng).cwiseAbs2().array();
    sum += p;
    sum2 += p * p;
  }
  const Eigen::ArrayXXd mean = sum / samples;
  const Eigen::ArrayXXd var = (sum2 / samples - mean * mean) * samples /
                              (samples - 1.0);
  const Eigen::ArrayXXd z =
      (mean - 1.0 / d).abs() / (var / samples).sqrt();
  return z.maxCoeff();
}

bool RankSuite() {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      const SubspaceBasis b(n, k);
      const auto scan = oracle::ScanSector(n, k);
      if (static_cast<std::size_t>(b.dim()) != scan.size()) return false;
      for (std::size_t i = 0; i < scan.size(); ++i) {
        const Index idx = static_cast<Index>(i);
        if (b.Unrank(idx) != scan[i] || b.Rank(scan[i]) != idx) return false;
      }
    }
  }
  return true;
}

Outcome PropertySuites() {
  const double gate = GateApplicationSuite();
  const double grad = GradientSuite();
  const double proj = ProjectionSuite();
  const double haar = HaarMomentSuite();
  const bool rank = RankSuite();
  std::printf("  gate application: 200 cases, max error %.2e\n", gate);
  std::printf("  gradients: 20 cases, max |adjoint - fd| %.2e\n", grad);
  std::printf("  projection spectra: max error %.2e\n", proj);
  std::printf("  Haar E|U_ij|^2 (d=4, 1e5 samples): max deviation %.2f sigma\n",
              haar);
  std::printf("  rank/unrank n <= 10: %s\n", rank ? "bijective" : "BROKEN");
  return {gate <= 1e-11 && grad <= 1e-6 && proj <= 1e-9 && haar <= 3.0 && rank,
          Fmt("gate %.1e, grad %.1e, spectrum %.1e, Haar %.2f sigma, rank %s",
              gate, grad, proj, haar, rank ? "ok" : "broken")};
}

}  // namespace
}  // namespace hwp

int main(int argc, char** argv) {
  using hwp::Outcome;
  const std::map<int, std::pair<const char*, std::function<Outcome()>>> all = {
      {1, {"closure dimensions, 15 configurations x FC", hwp::DlaTable}},
      {2, {"j+e on the ring", hwp::NearestNeighbourBoundary}},
      {3, {"unitary approximation", hwp::UnitaryApproximation}},
      {4, {"overparameterization knee", hwp::OverparameterizationKnee}},
      {5, {"Hubbard VQE, BS vs EHV", hwp::HubbardVqe}},
      {6, {"U = 0 consistency", hwp::NoninteractingConsistency}},
      {7, {"gradient variance", hwp::Variance}},
      {8, {"property suites", hwp::PropertySuites}},
  };
  hwp::g_jobs = std::max(1u, std::thread::hardware_concurrency());
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--jobs" && i + 1 < argc) {
      hwp::g_jobs = std::max(1, std::atoi(argv[++i]));
    } else if (const int c = std::atoi(a.c_str()); all.contains(c)) {
      selected.insert(c);
    } else {
      std::fprintf(stderr, "usage: %s [--jobs N] [criterion ...]\n", argv[0]);
      return 2;
    }
  }
  if (selected.empty()) {
    for (const auto& [c, _] : all) selected.insert(c);
  }
  int failed = 0;
  for (int c : selected) {
    const auto& [name, run] = all.at(c);
    std::printf("Criterion %d (%s)\n", c, name);
    std::fflush(stdout);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("Criterion %d: %s  %s [%.1f s]\n", c, o.pass ? "PASS" : "FAIL",
                o.summary.c_str(), hwp::Seconds(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(selected.size()) - failed, selected.size());
  return failed == 0 ? 0 : 1;
}
