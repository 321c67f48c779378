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

#include "hwp/hamiltonian.h"

#include <algorithm>
#include <set>

#include <Eigen/Eigenvalues>

namespace hwp {

Boundary ParseBoundary(std::string_view text) {
  if (text == "open") return Boundary::kOpen;
  if (text == "periodic") return Boundary::kPeriodic;
  throw std::invalid_argument("unknown boundary '" + std::string(text) +
                              "' (expected open or periodic)");
}

std::string BoundaryName(Boundary b) {
  return b == Boundary::kOpen ? "open" : "periodic";
}

int LatticeSpec::Site(int row, int col) const {
  return row * cols + (row % 2 == 0 ? col : cols - 1 - col);
}

void LatticeSpec::Validate() const {
  if (rows < 1 || cols < 1 || rows * cols < 2) {
    throw std::invalid_argument("lattice needs at least two sites");
  }
  if (num_qubits() > kMaxQubits) {
    throw std::invalid_argument("lattice too large for the qubit register");
  }
}

std::vector<std::pair<int, int>> LatticeSpec::Edges() const {
  Validate();
  std::set<std::pair<int, int>> edges;
  auto bond = [&](int r0, int c0, int r1, int c1) {
    const int a = Site(r0, c0), b = Site(r1, c1);
    if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
  };
  const bool wrap = boundary == Boundary::kPeriodic;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) bond(r, c, r, c + 1);
      else if (wrap && cols > 2) bond(r, c, r, 0);
      if (r + 1 < rows) bond(r, c, r + 1, c);
      else if (wrap && rows > 2) bond(r, c, 0, c);
    }
  }
  return {edges.begin(), edges.end()};
}

PauliHamiltonian FermiHubbardPauli(const LatticeSpec& spec) {
  spec.Validate();
  PauliHamiltonian h(spec.num_qubits());
  auto hop = [&](int p, int q) {
    if (p > q) std::swap(p, q);
    Bitstring string = 0;
    for (int m = p + 1; m < q; ++m) string |= Bitstring{1} << m;
    const Bitstring ends = (Bitstring{1} << p) | (Bitstring{1} << q);
    h.Add(-0.5 * spec.t, PauliWord{ends, string});         // X Z..Z X
    h.Add(-0.5 * spec.t, PauliWord{ends, string | ends});  // Y Z..Z Y
  };
  for (auto [a, b] : spec.Edges()) {
    hop(spec.up_qubit(a), spec.up_qubit(b));
    hop(spec.down_qubit(a), spec.down_qubit(b));
  }
  if (spec.u != 0.0) {
    for (int s = 0; s < spec.num_sites(); ++s) {
      const Bitstring zu = Bitstring{1} << spec.up_qubit(s);
      const Bitstring zd = Bitstring{1} << spec.down_qubit(s);
      const double q = 0.25 * spec.u;
      h.Add(q, PauliWord::Identity());
      h.Add(-q, PauliWord{0, zu});
      h.Add(-q, PauliWord{0, zd});
      h.Add(q, PauliWord{0, zu | zd});
    }
  }
  h.Prune(0.0);
  return h;
}

Eigen::MatrixXd HoppingMatrix(const LatticeSpec& spec) {
  const int n = spec.num_sites();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (auto [a, b] : spec.Edges()) {
    m(a, b) -= spec.t;
    m(b, a) -= spec.t;
  }
  return m;
}

double NoninteractingEnergy(const LatticeSpec& spec, int n_up, int n_down) {
  const int n = spec.num_sites();
  if (n_up < 0 || n_down < 0 || n_up > n || n_down > n) {
    throw std::domain_error("occupation exceeds the site count");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(HoppingMatrix(spec),
                                                    Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  return ev.head(n_up).sum() + ev.head(n_down).sum();
}

SubspaceOperator::SubspaceOperator(BasisPtr basis, Sparse matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != basis_->dim() || matrix_.cols() != basis_->dim()) {
    throw std::domain_error("operator shape does not match sector");
  }
  matrix_.makeCompressed();
}

SubspaceOperator SubspaceOperator::FromDense(BasisPtr basis,
                                             const Eigen::MatrixXcd& matrix) {
  return SubspaceOperator(std::move(basis), matrix.sparseView(0.0, 0.0));
}

bool SubspaceOperator::IsHermitian(double tol) const {
  const Sparse adj = matrix_.adjoint();
  return (matrix_ - adj).norm() <= tol;
}

SubspaceOperator ProjectPauli(const PauliHamiltonian& h, BasisPtr basis) {
  if (h.num_qubits() > basis->num_qubits()) {
    throw std::domain_error("Hamiltonian acts on " +
                            std::to_string(h.num_qubits()) +
                            " qubits but the sector has " +
                            std::to_string(basis->num_qubits()));
  }
  if (!h.ConservesNumber()) {
    throw NotNumberConserving(
        "Hamiltonian does not conserve particle number; refusing to project");
  }
  const Index d = basis->dim();
  std::vector<Eigen::Triplet<Complex, Index>> entries;
  for (const PauliTerm& t : h.Terms()) {
    const int flips = Popcount(t.word.x);
    for (Index col = 0; col < d; ++col) {
      const Bitstring b = basis->state(col);
      if (2 * Popcount(b & t.word.x) != flips) continue;  // leaves the sector
      const Index row = basis->RankUnchecked(b ^ t.word.x);
      entries.emplace_back(row, col, t.coefficient * t.word.Phase(b));
    }
  }
  SubspaceOperator::Sparse m(d, d);
  m.setFromTriplets(entries.begin(), entries.end());
  m.prune(Complex(0.0), 0.0);
  return SubspaceOperator(std::move(basis), std::move(m));
}

GroundState ExactGroundState(const SubspaceOperator& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op.Dense());
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver did not converge");
  }
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

Eigen::VectorXd Spectrum(const SubspaceOperator& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op.Dense(),
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

std::pair<int, int> SpinSplit(int k) { return {(k + 1) / 2, k / 2}; }

Bitstring HartreeFockBitstring(const LatticeSpec& spec, int k) {
  const int n = spec.num_sites();
  if (k < 0 || k > 2 * n) throw std::domain_error("occupation out of range");
  auto [up, down] = SpinSplit(k);
  Bitstring b = 0;
  for (int s = 0; s < up; ++s) b |= Bitstring{1} << spec.up_qubit(s);
  for (int s = 0; s < down; ++s) b |= Bitstring{1} << spec.down_qubit(s);
  return b;
}

}  // namespace hwp
