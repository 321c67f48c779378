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

// Fermi-Hubbard lattices, sector projection of Pauli Hamiltonians and exact
// diagonalization.
//
// Qubit layout is spin-blocked: with N sites numbered in row-major snake
// order, spin-up of site s is qubit s and spin-down is qubit N + s.

#ifndef HWP_HAMILTONIAN_H_
#define HWP_HAMILTONIAN_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "hwp/pauli.h"
#include "hwp/subspace.h"

namespace hwp {

enum class Boundary { kOpen, kPeriodic };

Boundary ParseBoundary(std::string_view text);  // "open" / "periodic"
std::string BoundaryName(Boundary b);

struct LatticeSpec {
  int rows = 1;
  int cols = 2;
  double t = 1.0;
  double u = 0.0;
  Boundary boundary = Boundary::kOpen;

  int num_sites() const { return rows * cols; }
  int num_qubits() const { return 2 * num_sites(); }
  int up_qubit(int site) const { return site; }
  int down_qubit(int site) const { return num_sites() + site; }

  // Snake order: even rows left to right, odd rows right to left.
  int Site(int row, int col) const;
  // Nearest-neighbour bonds as site pairs (a < b), without duplicates.
  std::vector<std::pair<int, int>> Edges() const;
  // Throws std::invalid_argument unless rows, cols >= 1 and sites >= 2.
  void Validate() const;
};

// -t sum_{<ij>, sigma} (a+_i a_j + h.c.) + U sum_i n_i,up n_i,down under
// Jordan-Wigner.
PauliHamiltonian FermiHubbardPauli(const LatticeSpec& spec);

// One-body hopping matrix: -t on every bond.
Eigen::MatrixXd HoppingMatrix(const LatticeSpec& spec);

// Sum over spins of the lowest n_sigma hopping eigenvalues.
double NoninteractingEnergy(const LatticeSpec& spec, int n_up, int n_down);

// Hermitian operator restricted to one sector, stored row-sparse.
class SubspaceOperator {
 public:
  using Sparse = Eigen::SparseMatrix<Complex, Eigen::RowMajor, Index>;

  SubspaceOperator(BasisPtr basis, Sparse matrix);
  static SubspaceOperator FromDense(BasisPtr basis,
                                    const Eigen::MatrixXcd& matrix);

  const SubspaceBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  Index dim() const { return basis_->dim(); }
  const Sparse& sparse() const { return matrix_; }
  Eigen::MatrixXcd Dense() const { return Eigen::MatrixXcd(matrix_); }

  Eigen::VectorXcd Apply(const Eigen::VectorXcd& v) const {
    return matrix_ * v;
  }
  Complex Expectation(const Eigen::VectorXcd& v) const {
    return v.dot(matrix_ * v);
  }
  bool IsHermitian(double tol = 1e-12) const;

 private:
  BasisPtr basis_;
  Sparse matrix_;
};

class NotNumberConserving : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// P_k H P_k in the basis order. Throws NotNumberConserving when H mixes
// sectors and std::domain_error when H acts on more qubits than the basis.
SubspaceOperator ProjectPauli(const PauliHamiltonian& h, BasisPtr basis);

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXcd vector;
};

// Dense Hermitian eigensolver.
GroundState ExactGroundState(const SubspaceOperator& op);
Eigen::VectorXd Spectrum(const SubspaceOperator& op);

// Spin-split reference occupation for k particles: ceil(k/2) up electrons
// and floor(k/2) down electrons on the lowest-numbered sites.
Bitstring HartreeFockBitstring(const LatticeSpec& spec, int k);
std::pair<int, int> SpinSplit(int k);

}  // namespace hwp

#endif  // HWP_HAMILTONIAN_H_
