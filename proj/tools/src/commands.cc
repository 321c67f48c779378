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


#include "commands.h"

#include <chrono>
#include <iostream>
#include <sstream>

#include "hwp/experiments.h"
#include "hwp/pauli.h"

namespace hwpsim {

namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

hwp::OptimizerConfig OptimizerFrom(const json& cfg) {
  hwp::OptimizerConfig opt;
  opt.learning_rate = GetDouble(cfg, "lr");
  opt.max_iters = GetInt(cfg, "max_iters");
  opt.target_loss = GetDouble(cfg, "target_loss");
  opt.Validate();
  return opt;
}

std::uint64_t SeedFrom(const json& cfg) {
  const int s = GetInt(cfg, "seed");
  if (s < 0) throw UsageError("seed must be >= 0");
  return static_cast<std::uint64_t>(s);
}

int JobsFrom(const json& cfg) {
  const int j = GetInt(cfg, "jobs");
  if (j < 1) throw UsageError("jobs must be >= 1");
  return j;
}

hwp::LatticeSpec LatticeFrom(const json& cfg, double u) {
  hwp::LatticeSpec lat;
  lat.rows = GetInt(cfg, "rows");
  lat.cols = GetInt(cfg, "cols");
  lat.t = GetDouble(cfg, "t");
  lat.u = u;
  lat.boundary = hwp::ParseBoundary(GetString(cfg, "boundary"));
  lat.Validate();
  return lat;
}

std::string Bool(bool b) { return b ? "true" : "false"; }

// "4:1,6:2" -> {(4,1),(6,2)}.
std::vector<std::pair<int, int>> ParseSectors(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw UsageError("sector '" + item + "' is not of the form n:k");
    }
    const auto n = ParseIntList(item.substr(0, colon));
    const auto k = ParseIntList(item.substr(colon + 1));
    if (n.size() != 1 || k.size() != 1) {
      throw UsageError("sector '" + item + "' is not of the form n:k");
    }
    out.emplace_back(n[0], k[0]);
  }
  return out;
}

const FlagSpec kSeedFlag{"--seed", "seed", FlagKind::kInt, "Base RNG seed"};
const FlagSpec kLrFlag{"--lr", "lr", FlagKind::kDouble, "Adam learning rate"};
const FlagSpec kMaxItersFlag{"--max-iters", "max_iters", FlagKind::kInt,
                             "Iteration cap per training run"};
const FlagSpec kTargetLossFlag{"--target-loss", "target_loss",
                               FlagKind::kDouble,
                               "Stop once the (excess) loss reaches this"};

// ---- dla -------------------------------------------------------------------

int RunDlaCommand(const RunContext& ctx) {
  const json& cfg = ctx.config;
  hwp::DlaConfig dc;
  dc.cases = hwp::DlaCasesFor(GetString(cfg, "gate"));
  dc.sectors = hwp::SectorGrid(GetIntList(cfg, "n"), GetIntList(cfg, "k"));
  dc.topology = hwp::ParseTopology(GetString(cfg, "topology"));
  dc.tol = GetDouble(cfg, "tol");
  dc.jobs = JobsFrom(cfg);
  if (dc.sectors.empty()) throw UsageError("empty (n, k) grid");

  const auto t0 = Clock::now();
  const auto rows = hwp::RunDla(dc);
  int mismatches = 0;
  json results = json::array();
  CsvTable table({"flags", "r", "j", "e", "s", "topology", "n", "k", "d",
                  "computed_dim", "predicted_dim", "match", "universal",
                  "universal_predicted"});
  for (const auto& r : rows) {
    const auto& c = r.dla_case.coefficients;
    const std::string status =
        !r.supported ? "unsupported" : (r.match ? "match" : "mismatch");
    if (r.supported && !r.match) ++mismatches;
    json row{{"flags", r.dla_case.label},
             {"coefficients", {c.r, c.j, c.e, c.s}},
             {"topology", hwp::TopologyName(r.topology)},
             {"n", r.n},
             {"k", r.k},
             {"d", r.d},
             {"computed_dim", r.computed},
             {"predicted_dim", r.supported ? json(r.predicted) : json()},
             {"status", status},
             {"universal", r.universal},
             {"universal_predicted", r.universal_predicted}};
    results.push_back(row);
    table.AddRow({r.dla_case.label, FormatDouble(c.r), FormatDouble(c.j),
                  FormatDouble(c.e), FormatDouble(c.s),
                  hwp::TopologyName(r.topology), std::to_string(r.n),
                  std::to_string(r.k), std::to_string(r.d),
                  std::to_string(r.computed),
                  r.supported ? std::to_string(r.predicted) : "unsupported",
                  r.supported ? Bool(r.match) : "unsupported",
                  Bool(r.universal), Bool(r.universal_predicted)});
  }
  Emit("dla", cfg, ctx.format, results, table, ctx.out);
  std::cerr << "dla: " << rows.size() << " rows, " << mismatches
            << " mismatches, " << SecondsSince(t0) << " s\n";
  return mismatches == 0 ? 0 : 1;
}

Command DlaCommand() {
  Command c;
  c.name = "dla";
  c.help = "Lie closure dimension versus the closed-form prediction";
  c.defaults = {{"n", {4, 5, 6}}, {"k", json::array()}, {"gate", "all"},
                {"topology", "fc"}, {"tol", hwp::kDefaultDlaTolerance},
                {"jobs", 1}, {"format", "csv"}};
  c.flags = {
      {"--n", "n", FlagKind::kIntList, "Qubit counts, e.g. 4,5,6 or 4-6"},
      {"--k", "k", FlagKind::kIntList,
       "Hamming weights; default 1..n/2 for each n"},
      {"--gate", "gate", FlagKind::kString,
       "all | bs | gr | xy | flag set such as r+e | custom:r,j,e,s"},
      {"--topology", "topology", FlagKind::kString, "fc | nn"},
      {"--tol", "tol", FlagKind::kDouble, "Rank tolerance"},
  };
  c.run = RunDlaCommand;
  return c;
}

// ---- approx ----------------------------------------------------------------

int RunApproxCommand(const RunContext& ctx) {
  const json& cfg = ctx.config;
  hwp::ApproxConfig ac;
  ac.n = GetInt(cfg, "n");
  ac.k = GetInt(cfg, "k");
  ac.gate = hwp::ParseAnsatzKind(GetString(cfg, "gate"));
  ac.topology = hwp::ParseTopology(GetString(cfg, "topology"));
  ac.targets = GetInt(cfg, "targets");
  ac.param_counts = GetIntList(cfg, "params");
  ac.optimizer = OptimizerFrom(cfg);
  ac.seed = SeedFrom(cfg);
  ac.jobs = JobsFrom(cfg);

  const auto t0 = Clock::now();
  const hwp::ApproxReport rep = hwp::RunApprox(ac);
  json trials = json::array();
  CsvTable table({"param_count", "target", "seed", "iterations", "final_loss",
                  "stop_reason"});
  for (const auto& t : rep.trials) {
    trials.push_back({{"param_count", t.param_count},
                      {"target", t.target},
                      {"seed", t.seed},
                      {"iterations", t.result.iterations},
                      {"final_loss", t.result.final_loss},
                      {"stop_reason", t.result.stop_reason},
                      {"loss_history", t.result.loss_history}});
    table.AddRow({std::to_string(t.param_count), std::to_string(t.target),
                  std::to_string(t.seed), std::to_string(t.result.iterations),
                  FormatDouble(t.result.final_loss), t.result.stop_reason});
  }
  json sweep = json::array();
  for (const auto& p : rep.sweep) {
    sweep.push_back({{"param_count", p.param_count},
                     {"median_loss", p.median_loss},
                     {"min_loss", p.min_loss},
                     {"max_loss", p.max_loss}});
    std::cerr << "approx: params " << p.param_count << " median "
              << p.median_loss << " (min " << p.min_loss << ", max "
              << p.max_loss << ")\n";
  }
  Emit("approx", cfg, ctx.format,
       {{"d", rep.d}, {"sweep", sweep}, {"trials", trials}}, table, ctx.out);
  std::cerr << "approx: d = " << rep.d << ", " << SecondsSince(t0) << " s\n";
  return 0;
}

Command ApproxCommand() {
  Command c;
  c.name = "approx";
  c.help = "Train circuits to approximate Haar-random sector unitaries";
  c.defaults = {{"n", 5},          {"k", 1},
                {"gate", "bs"},    {"topology", "nn"},
                {"targets", 10},   {"params", json::array()},
                {"seed", 0},       {"lr", 0.05},
                {"max_iters", 2000}, {"target_loss", 1e-12},
                {"jobs", 1},       {"format", "json"}};
  c.flags = {
      {"--n", "n", FlagKind::kInt, "Qubits"},
      {"--k", "k", FlagKind::kInt, "Hamming weight"},
      {"--gate", "gate", FlagKind::kString, "bs | gr"},
      {"--topology", "topology", FlagKind::kString, "nn | fc"},
      {"--targets,--seeds", "targets", FlagKind::kInt,
       "Number of Haar targets (one training run each)"},
      {"--params", "params", FlagKind::kIntList,
       "Parameter counts to sweep; default 2 d^2"},
      kSeedFlag, kLrFlag, kMaxItersFlag, kTargetLossFlag,
  };
  c.run = RunApproxCommand;
  return c;
}

// ---- vqe -------------------------------------------------------------------

int RunVqeCommand(const RunContext& ctx) {
  const json& cfg = ctx.config;
  const std::string pauli = GetString(cfg, "pauli");
  std::vector<double> us = GetDoubleList(cfg, "u");
  std::vector<int> ks = GetIntList(cfg, "k");
  if (!pauli.empty()) {
    if (ks.empty()) throw UsageError("--k is required with --pauli");
    us = {0.0};
  }
  if (us.empty()) throw UsageError("empty U list");
  if (ks.empty()) ks = {-1};

  hwp::AnsatzSpec ansatz;
  ansatz.kind = hwp::ParseAnsatzKind(GetString(cfg, "gate"));
  ansatz.topology = hwp::ParseTopology(GetString(cfg, "topology"));
  ansatz.layers = GetInt(cfg, "layers");
  ansatz.num_params = GetInt(cfg, "params");

  const auto t0 = Clock::now();
  json runs = json::array();
  CsvTable table({"u", "k", "ansatz", "layers", "num_params", "seed",
                  "iterations", "energy", "exact_energy", "error",
                  "stop_reason"});
  for (double u : us) {
    for (int k : ks) {
      hwp::VqeConfig vc;
      if (pauli.empty()) vc.lattice = LatticeFrom(cfg, u);
      vc.pauli_file = pauli;
      vc.k = k;
      vc.ansatz = ansatz;
      vc.seeds = GetInt(cfg, "seeds");
      vc.seed = SeedFrom(cfg);
      vc.optimizer = OptimizerFrom(cfg);
      vc.jobs = JobsFrom(cfg);
      const hwp::VqeReport rep = hwp::RunVqe(vc);

      json trials = json::array();
      for (const auto& t : rep.trials) {
        trials.push_back({{"seed", t.seed},
                          {"energy", t.energy},
                          {"error", t.error},
                          {"iterations", t.result.iterations},
                          {"stop_reason", t.result.stop_reason},
                          {"loss_history", t.result.loss_history}});
        table.AddRow({pauli.empty() ? FormatDouble(u) : "", std::to_string(rep.k),
                      hwp::AnsatzName(ansatz.kind),
                      std::to_string(ansatz.layers),
                      std::to_string(rep.num_params), std::to_string(t.seed),
                      std::to_string(t.result.iterations),
                      FormatDouble(t.energy), FormatDouble(rep.exact_energy),
                      FormatDouble(t.error), t.result.stop_reason});
      }
      runs.push_back(
          {{"u", pauli.empty() ? json(u) : json()},
           {"n", rep.n},
           {"k", rep.k},
           {"d", rep.d},
           {"num_params", rep.num_params},
           {"init_bitstring", rep.init_bitstring},
           {"exact_energy", rep.exact_energy},
           {"noninteracting_energy", rep.has_noninteracting
                                         ? json(rep.noninteracting_energy)
                                         : json()},
           {"best_error", rep.best_error},
           {"median_error", rep.median_error},
           {"trials", trials}});
      std::cerr << "vqe: u " << u << " k " << rep.k << " exact "
                << rep.exact_energy << " best error " << rep.best_error
                << " median error " << rep.median_error << '\n';
    }
  }
  Emit("vqe", cfg, ctx.format, runs, table, ctx.out);
  std::cerr << "vqe: " << SecondsSince(t0) << " s\n";
  return 0;
}

Command VqeCommand() {
  Command c;
  c.name = "vqe";
  c.help = "Variational ground state search for a Hubbard lattice or Pauli file";
  c.defaults = {{"rows", 1},       {"cols", 4},
                {"t", 1.0},        {"u", {4.0}},
                {"boundary", "open"}, {"k", json::array()},
                {"pauli", ""},     {"gate", "bs"},
                {"topology", "nn"}, {"layers", 5},
                {"params", 0},     {"seeds", 5},
                {"seed", 0},       {"lr", 0.05},
                {"max_iters", 2000}, {"target_loss", 1e-12},
                {"jobs", 1},       {"format", "json"}};
  c.flags = {
      {"--rows", "rows", FlagKind::kInt, "Lattice rows"},
      {"--cols", "cols", FlagKind::kInt, "Lattice columns"},
      {"--t", "t", FlagKind::kDouble, "Hopping amplitude"},
      {"--u", "u", FlagKind::kDoubleList, "On-site interaction(s), e.g. 0,4,8"},
      {"--boundary", "boundary", FlagKind::kString, "open | periodic"},
      {"--k", "k", FlagKind::kIntList,
       "Occupation(s); default half filling (one per site)"},
      {"--pauli", "pauli", FlagKind::kString,
       "Read the Hamiltonian from a Pauli text file instead"},
      {"--gate", "gate", FlagKind::kString, "bs | gr | ehv"},
      {"--topology", "topology", FlagKind::kString, "nn | fc"},
      {"--layers", "layers", FlagKind::kInt, "Ansatz layers"},
      {"--params", "params", FlagKind::kInt,
       "Parameter budget for bs/gr (overrides --layers when > 0)"},
      {"--seeds", "seeds", FlagKind::kInt, "Training runs per point"},
      kSeedFlag, kLrFlag, kMaxItersFlag, kTargetLossFlag,
  };
  c.run = RunVqeCommand;
  return c;
}

// ---- variance --------------------------------------------------------------

int RunVarianceCommand(const RunContext& ctx) {
  const json& cfg = ctx.config;
  const std::string sectors_text = GetString(cfg, "sectors");
  const auto sectors =
      sectors_text.empty()
          ? hwp::SectorGrid(GetIntList(cfg, "n"), GetIntList(cfg, "k"))
          : ParseSectors(sectors_text);
  if (sectors.empty()) throw UsageError("empty (n, k) grid");
  hwp::VarianceConfig base;
  base.depth = GetInt(cfg, "depth");
  base.samples = GetInt(cfg, "samples");
  base.seed = SeedFrom(cfg);
  base.probe = hwp::ParseProbeGate(GetString(cfg, "probe"));
  base.jobs = JobsFrom(cfg);

  const auto t0 = Clock::now();
  const auto reports = hwp::RunVariance(sectors, base);
  json results = json::array();
  CsvTable table({"n", "k", "empirical", "exact", "approx", "haar", "ratio",
                  "mean", "mean_stderr", "samples", "depth", "seed", "probe"});
  for (const auto& r : reports) {
    const auto& c = r.config;
    results.push_back({{"n", c.n},
                       {"k", c.k},
                       {"empirical", r.empirical_var},
                       {"exact", r.exact_formula},
                       {"approx", r.approx_formula},
                       {"haar", r.haar_formula},
                       {"ratio", r.ratio},
                       {"mean", r.mean},
                       {"mean_stderr", r.mean_stderr},
                       {"num_gates", r.num_gates},
                       {"probe_index", r.probe_index}});
    table.AddRow({std::to_string(c.n), std::to_string(c.k),
                  FormatDouble(r.empirical_var), FormatDouble(r.exact_formula),
                  FormatDouble(r.approx_formula), FormatDouble(r.haar_formula),
                  FormatDouble(r.ratio), FormatDouble(r.mean),
                  FormatDouble(r.mean_stderr), std::to_string(c.samples),
                  std::to_string(c.depth), std::to_string(c.seed),
                  hwp::ProbeGateName(c.probe)});
  }
  Emit("variance", cfg, ctx.format, results, table, ctx.out);
  std::cerr << "variance: " << reports.size() << " rows, " << SecondsSince(t0)
            << " s\n";
  return 0;
}

Command VarianceCommand() {
  Command c;
  c.name = "variance";
  c.help = "Monte Carlo gradient variance of a deep random circuit";
  c.defaults = {{"n", {4}},         {"k", {1}},
                {"sectors", ""},    {"samples", 2000},
                {"depth", 100},     {"seed", 0},
                {"probe", "normalized"}, {"jobs", 1},
                {"format", "csv"}};
  c.flags = {
      {"--n", "n", FlagKind::kIntList, "Qubit counts"},
      {"--k", "k", FlagKind::kIntList,
       "Hamming weights (crossed with --n); empty means 1..n/2"},
      {"--sectors", "sectors", FlagKind::kString,
       "Explicit pairs such as 4:1,6:2 (overrides --n/--k)"},
      {"--samples", "samples", FlagKind::kInt, "Parameter draws per sector"},
      {"--depth", "depth", FlagKind::kInt, "Fully connected layers"},
      {"--probe", "probe", FlagKind::kString,
       "normalized | bs: generator of the differentiated gate"},
      kSeedFlag,
  };
  c.run = RunVarianceCommand;
  return c;
}

// ---- hubbard-build ---------------------------------------------------------

int RunHubbardCommand(const RunContext& ctx) {
  const json& cfg = ctx.config;
  const hwp::LatticeSpec lat = LatticeFrom(cfg, GetDouble(cfg, "u"));
  const hwp::PauliHamiltonian h = hwp::FermiHubbardPauli(lat);
  std::ofstream file;
  std::ostream& out = OpenOutput(ctx.out, file);
  if (ctx.format == "json") {
    json terms = json::array();
    for (const hwp::PauliTerm& term : h.Terms()) {
      terms.push_back({{"re", term.coefficient.real()},
                       {"im", term.coefficient.imag()},
                       {"word", term.word.ToString()}});
    }
    json doc{{"tool", "hwpsim"},
             {"version", hwp::Version()},
             {"command", "hubbard-build"},
             {"timestamp", TimestampUtc()},
             {"config", cfg},
             {"results", {{"num_qubits", h.num_qubits()}, {"terms", terms}}}};
    out << doc.dump(2) << '\n';
  } else {
    out << HeaderComment("hubbard-build", cfg);
    hwp::WritePauliText(h, out);
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed");
  return 0;
}

Command HubbardCommand() {
  Command c;
  c.name = "hubbard-build";
  c.help = "Write the Jordan-Wigner Hubbard Hamiltonian as a Pauli file";
  c.defaults = {{"rows", 1}, {"cols", 4}, {"t", 1.0}, {"u", 4.0},
                {"boundary", "open"}, {"format", "text"}};
  c.flags = {
      {"--rows", "rows", FlagKind::kInt, "Lattice rows"},
      {"--cols", "cols", FlagKind::kInt, "Lattice columns"},
      {"--t", "t", FlagKind::kDouble, "Hopping amplitude"},
      {"--u", "u", FlagKind::kDouble, "On-site interaction"},
      {"--boundary", "boundary", FlagKind::kString, "open | periodic"},
  };
  c.run = RunHubbardCommand;
  return c;
}

}  // namespace

std::vector<Command> AllCommands() {
  return {DlaCommand(), ApproxCommand(), VqeCommand(), VarianceCommand(),
          HubbardCommand()};
}

json FlagValue(const FlagSpec& spec, const std::string& text) {
  switch (spec.kind) {
    case FlagKind::kInt: {
      const auto v = ParseIntList(text);
      if (v.size() != 1) throw UsageError(spec.flag + " takes one integer");
      return v[0];
    }
    case FlagKind::kDouble: {
      const auto v = ParseDoubleList(text);
      if (v.size() != 1) throw UsageError(spec.flag + " takes one number");
      return v[0];
    }
    case FlagKind::kString:
      return text;
    case FlagKind::kIntList:
      return ParseIntList(text);
    case FlagKind::kDoubleList:
      return ParseDoubleList(text);
  }
  return json();
}

}  // namespace hwpsim
