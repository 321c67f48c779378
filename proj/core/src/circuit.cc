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

#include "hwp/circuit.h"

namespace hwp {

Circuit::Circuit(BasisPtr basis, int num_params)
    : basis_(std::move(basis)), num_params_(num_params) {
  if (num_params_ < 0) throw std::domain_error("negative parameter count");
}

void Circuit::Add(const GateInstance& g) {
  if (g.param_slot < 0 || g.param_slot >= num_params_) {
    throw std::domain_error("parameter slot " + std::to_string(g.param_slot) +
                            " out of range");
  }
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    if (tables_[i].q0 == g.q0 && tables_[i].q1 == g.q1) {
      gates_.push_back(g);
      table_index_.push_back(i);
      return;
    }
  }
  tables_.push_back(BuildPairTable(*basis_, g.q0, g.q1));
  gates_.push_back(g);
  table_index_.push_back(tables_.size() - 1);
}

void Circuit::CheckParams(const Eigen::VectorXd& theta) const {
  if (theta.size() != num_params_) {
    throw std::domain_error("expected " + std::to_string(num_params_) +
                            " parameters, got " +
                            std::to_string(theta.size()));
  }
}

void Circuit::Apply(const Eigen::VectorXd& theta, Complex* data,
                    Index cols) const {
  CheckParams(theta);
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const GateInstance& g = gates_[i];
    const double t = theta(g.param_slot);
    ApplyBlock(table(i), g.gate.BlockUnitary(t), g.gate.PhaseOn11(t), data,
               dim(), cols);
  }
}

void Circuit::Apply(const Eigen::VectorXd& theta, SubspaceState& state) const {
  if (!state.basis().SameSector(*basis_)) {
    throw std::domain_error("state and circuit live in different sectors");
  }
  Apply(theta, state.mutable_amplitudes().data(), 1);
}

AnsatzKind ParseAnsatzKind(std::string_view text) {
  if (text == "bs") return AnsatzKind::kBs;
  if (text == "gr") return AnsatzKind::kGr;
  if (text == "ehv") return AnsatzKind::kEhv;
  throw std::invalid_argument("unknown ansatz '" + std::string(text) +
                              "' (expected bs, gr or ehv)");
}

std::string AnsatzName(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::kBs: return "bs";
    case AnsatzKind::kGr: return "gr";
    case AnsatzKind::kEhv: return "ehv";
  }
  return "?";
}

std::vector<std::pair<int, int>> LayerPairs(Topology topology, int n) {
  std::vector<std::pair<int, int>> out;
  if (n < 2) return out;
  if (topology == Topology::kNearestNeighborRing) {
    if (n == 2) return {{0, 1}};
    for (int i = 0; i < n; ++i) out.emplace_back(i, (i + 1) % n);
    return out;
  }
  // Greedy colouring: each pair goes to the first sublayer where both of its
  // qubits are still free.
  std::vector<std::vector<std::pair<int, int>>> sub;
  std::vector<std::vector<bool>> busy;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::size_t c = 0;
      while (c < sub.size() && (busy[c][i] || busy[c][j])) ++c;
      if (c == sub.size()) {
        sub.emplace_back();
        busy.emplace_back(static_cast<std::size_t>(n), false);
      }
      sub[c].emplace_back(i, j);
      busy[c][i] = busy[c][j] = true;
    }
  }
  for (const auto& s : sub) out.insert(out.end(), s.begin(), s.end());
  return out;
}

namespace {

Circuit BuildLayered(const AnsatzSpec& spec, BasisPtr basis) {
  const int n = basis->num_qubits();
  const auto pairs = LayerPairs(spec.topology, n);
  if (pairs.empty()) throw std::domain_error("ansatz needs at least 2 qubits");
  const int per_layer = static_cast<int>(pairs.size());
  int total = spec.num_params;
  if (total <= 0) {
    if (spec.layers < 1) throw std::domain_error("layers must be >= 1");
    total = spec.layers * per_layer;
  }
  const Gate gate = spec.kind == AnsatzKind::kBs ? Gate::Bs() : Gate::Gr();
  Circuit c(std::move(basis), total);
  for (int p = 0; p < total; ++p) {
    const int layer = p / per_layer;
    auto [a, b] = pairs[static_cast<std::size_t>(p % per_layer)];
    if (layer % 2 == 1) std::swap(a, b);
    c.Add({gate, a, b, p});
  }
  return c;
}

Circuit BuildEhv(const AnsatzSpec& spec, BasisPtr basis) {
  if (spec.topology != Topology::kNearestNeighborRing) {
    throw UnsupportedCase("EHV ansatz is defined for lattice connectivity only");
  }
  if (spec.num_params > 0) {
    throw std::invalid_argument("EHV does not support a parameter budget");
  }
  if (spec.layers < 0) throw std::domain_error("layers must be >= 0");
  const LatticeSpec& lat = spec.lattice;
  lat.Validate();
  if (lat.num_qubits() != basis->num_qubits()) {
    throw std::domain_error("lattice qubit count does not match the sector");
  }
  const int sites = lat.num_sites();
  const auto [n_up, n_down] = SpinSplit(basis->weight());
  if (n_up > sites || n_down > sites) {
    throw std::domain_error("occupation exceeds the site count");
  }

  struct Pending {
    Gate gate;
    int q0, q1, slot;
  };
  std::vector<Pending> gates;
  int slots = 0;
  auto diamond = [&](int offset, int m) {
    const int holes = sites - m;
    if (m == 0 || holes == 0) return;
    for (int w = 0; w <= m - 1 + holes - 1; ++w) {
      for (int a = 0; a < m; ++a) {
        const int h = w - a;
        if (h < 0 || h >= holes) continue;
        const int p = m - 1 - a + h;
        gates.push_back({Gate::Gr(), offset + p, offset + p + 1, slots++});
      }
    }
  };
  diamond(lat.up_qubit(0), n_up);
  diamond(lat.down_qubit(0), n_down);

  const auto edges = lat.Edges();
  for (int l = 0; l < spec.layers; ++l) {
    const int onsite = slots++;
    for (int s = 0; s < sites; ++s) {
      gates.push_back({Gate::Onsite(), lat.up_qubit(s), lat.down_qubit(s),
                       onsite});
    }
    const int hop = slots++;
    for (auto [a, b] : edges) {
      gates.push_back({Gate::Xy(), lat.up_qubit(a), lat.up_qubit(b), hop});
      gates.push_back({Gate::Xy(), lat.down_qubit(a), lat.down_qubit(b), hop});
    }
  }
  Circuit c(std::move(basis), slots);
  for (const auto& g : gates) c.Add({g.gate, g.q0, g.q1, g.slot});
  return c;
}

}  // namespace

Circuit BuildAnsatz(const AnsatzSpec& spec, BasisPtr basis) {
  if (spec.kind == AnsatzKind::kEhv) return BuildEhv(spec, std::move(basis));
  return BuildLayered(spec, std::move(basis));
}

}  // namespace hwp
