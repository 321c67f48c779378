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

// Parameterized circuits of weight-preserving gates and the ansatz layouts
// built from them. Gates are applied in list order, so the circuit unitary is
// U = U_{G-1} ... U_1 U_0.

#ifndef HWP_CIRCUIT_H_
#define HWP_CIRCUIT_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hwp/gates.h"
#include "hwp/hamiltonian.h"
#include "hwp/lie.h"
#include "hwp/subspace.h"

namespace hwp {

class Circuit {
 public:
  Circuit(BasisPtr basis, int num_params);

  // Throws std::domain_error on a bad qubit pair or parameter slot.
  void Add(const GateInstance& gate);

  const SubspaceBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  Index dim() const { return basis_->dim(); }
  int num_params() const { return num_params_; }
  std::size_t num_gates() const { return gates_.size(); }
  const std::vector<GateInstance>& gates() const { return gates_; }
  const GateInstance& gate(std::size_t i) const { return gates_[i]; }
  const PairTable& table(std::size_t i) const {
    return tables_[table_index_[i]];
  }

  // Throws std::domain_error unless theta has num_params() entries.
  void CheckParams(const Eigen::VectorXd& theta) const;

  // Applies U(theta) to each column of a column-major dim() x cols array.
  void Apply(const Eigen::VectorXd& theta, Complex* data, Index cols) const;
  void Apply(const Eigen::VectorXd& theta, SubspaceState& state) const;

 private:
  BasisPtr basis_;
  int num_params_;
  std::vector<GateInstance> gates_;
  std::vector<PairTable> tables_;
  std::vector<std::size_t> table_index_;
};

enum class AnsatzKind { kBs, kGr, kEhv };

AnsatzKind ParseAnsatzKind(std::string_view text);  // "bs", "gr", "ehv"
std::string AnsatzName(AnsatzKind kind);

struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::kBs;
  Topology topology = Topology::kNearestNeighborRing;
  int layers = 1;
  // When positive, layers are stacked until this many parameters exist and
  // the last layer is truncated; `layers` is then ignored. BS/GR only.
  int num_params = 0;
  // Used by EHV only.
  LatticeSpec lattice;
};

// Unoriented pairs (i < j) of one layer. Ring: (0,1), (1,2), ..., (n-1, 0).
// FC: every pair, ordered by greedy edge colouring into parallel sublayers.
std::vector<std::pair<int, int>> LayerPairs(Topology topology, int n);

// BS/GR: one parameter per gate, odd layers use the reversed orientation.
// EHV: a Givens-rotation network per spin that rotates the reference
// occupation, then `layers` repetitions of an onsite layer and a hopping
// layer with one shared parameter each. Throws UnsupportedCase for EHV with
// FC topology.
Circuit BuildAnsatz(const AnsatzSpec& spec, BasisPtr basis);

}  // namespace hwp

#endif  // HWP_CIRCUIT_H_
