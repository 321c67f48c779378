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

// Two-qubit Hamming-weight-preserving gates.
//
// Local two-qubit basis for a gate on the ordered pair (i, j) is
// |b_i b_j> in the order |00>, |01>, |10>, |11>. A weight-preserving
// Hamiltonian is supported on the central |01>,|10> block
//
//     [[ e + s , r + i j ],
//      [ r - i j, e - s  ]]
//
// i.e. H = r R + j J + e E + s S in terms of the four basis matrices.
// Swapping the pair orientation flips the sign of the j and s components.
// Pauli Z convention: Z|0> = |0>, Z|1> = -|1>.

#ifndef HWP_GATES_H_
#define HWP_GATES_H_

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hwp/subspace.h"

namespace hwp {

struct HwpCoefficients {
  double r = 0.0;  // Re b
  double j = 0.0;  // Im b
  double e = 0.0;  // (a + c) / 2
  double s = 0.0;  // (a - c) / 2

  bool IsZero(double tol = 1e-12) const;
  HwpCoefficients Reversed() const { return {r, -j, e, -s}; }
  friend bool operator==(const HwpCoefficients&,
                         const HwpCoefficients&) = default;
};

enum class BasisMatrix { kR, kJ, kE, kS };

HwpCoefficients UnitCoefficients(BasisMatrix m);

// 4x4 Hamiltonian in the |00>,|01>,|10>,|11> basis.
Eigen::Matrix4cd HwpHamiltonian2q(const HwpCoefficients& c);

// Inverse of HwpHamiltonian2q. Throws std::invalid_argument when `h` is not
// Hermitian or touches |00>/|11> (tolerance 1e-12).
HwpCoefficients Decompose(const Eigen::Matrix4cd& h);

enum class GateKind { kBs, kGr, kXy, kOnsite, kCustom };

// A gate type: the generator H such that U(theta) = exp(i theta H).
class Gate {
 public:
  static Gate Bs() { return Gate(GateKind::kBs, BsCoefficients()); }
  static Gate Gr() { return Gate(GateKind::kGr, {0.0, -1.0, 0.0, 0.0}); }
  static Gate Xy() { return Gate(GateKind::kXy, {1.0, 0.0, 0.0, 0.0}); }
  static Gate Onsite() { return Gate(GateKind::kOnsite, {}); }
  static Gate Custom(const HwpCoefficients& c) {
    return Gate(GateKind::kCustom, c);
  }

  // Accepts "bs", "gr", "xy", "onsite" (case-insensitive).
  static Gate FromName(std::string_view name);
  static HwpCoefficients BsCoefficients();

  GateKind kind() const { return kind_; }
  std::string name() const;

  // False only for the onsite gate, which phases |11> and is therefore not of
  // the central-block form.
  bool is_block_form() const { return kind_ != GateKind::kOnsite; }
  // Throws std::logic_error for the onsite gate.
  const HwpCoefficients& coefficients() const;

  Eigen::Matrix4cd Hamiltonian() const;
  Eigen::Matrix4cd Unitary(double theta) const;

  // Pieces used by in-sector application.
  Eigen::Matrix2cd GeneratorBlock() const;
  Complex GeneratorOn11() const { return is_block_form() ? 0.0 : 1.0; }
  Eigen::Matrix2cd BlockUnitary(double theta) const;
  Complex PhaseOn11(double theta) const;

 private:
  Gate(GateKind kind, const HwpCoefficients& c) : kind_(kind), coeffs_(c) {}

  GateKind kind_;
  HwpCoefficients coeffs_;
};

struct GateInstance {
  Gate gate = Gate::Bs();
  int q0 = 0;
  int q1 = 1;
  int param_slot = 0;
};

// Sector indices touched by a gate on the ordered pair (q0, q1).
// `lo[p]` has (b_q0, b_q1) = (0, 1) and `hi[p]` is its partner with (1, 0);
// `both` lists states with both bits set.
struct PairTable {
  int q0 = 0;
  int q1 = 0;
  std::vector<Index> lo;
  std::vector<Index> hi;
  std::vector<Index> both;
};

PairTable BuildPairTable(const SubspaceBasis& basis, int q0, int q1);

// Applies `block` (and `phase11` on |11>) to every column of a column-major
// d x cols array. Pass cols = 1 for a state vector.
void ApplyBlock(const PairTable& table, const Eigen::Matrix2cd& block,
                Complex phase11, Complex* data, Index rows, Index cols);

// In-sector action of exp(i theta H_gate) on qubits (q0, q1); O(d_k) and
// never builds a 2^n object. Throws std::domain_error on bad qubit indices.
void ApplyGate(SubspaceState& state, const GateInstance& g, double theta);

// Sector restriction of H_{ij} (x) prod_{q in z_mask} Z_q as a dense d x d
// Hermitian matrix. Multiply by i to obtain the Lie-algebra generator.
Eigen::MatrixXcd EmbedGenerator(const SubspaceBasis& basis,
                                const HwpCoefficients& c, int i, int j,
                                Bitstring z_mask = 0);
Eigen::MatrixXcd EmbedGenerator(const SubspaceBasis& basis, BasisMatrix m,
                                int i, int j, Bitstring z_mask = 0);
// Generator of any gate kind (including onsite) on the ordered pair.
Eigen::MatrixXcd EmbedGateHamiltonian(const SubspaceBasis& basis,
                                      const Gate& gate, int i, int j);

}  // namespace hwp

#endif  // HWP_GATES_H_
