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

#include "hwp/gates.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace hwp {

namespace {

constexpr double kShapeTol = 1e-12;
constexpr Complex kI(0.0, 1.0);

void CheckPair(const SubspaceBasis& basis, int i, int j) {
  const int n = basis.num_qubits();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw std::domain_error("invalid qubit pair (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") for " + std::to_string(n) +
                            " qubits");
  }
}

// exp(i theta (e I + r X - j Y + s Z)).
Eigen::Matrix2cd PauliVectorExp(const HwpCoefficients& c, double theta) {
  const double vx = c.r, vy = -c.j, vz = c.s;
  const double norm = std::sqrt(vx * vx + vy * vy + vz * vz);
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  const double angle = theta * norm;
  if (norm > 0.0) {
    const double cs = std::cos(angle);
    const double sn = std::sin(angle) / norm;
    u(0, 0) = Complex(cs, sn * vz);
    u(1, 1) = Complex(cs, -sn * vz);
    // i sn (vx X + vy Y): X -> off-diagonals 1, Y -> (-i, i).
    u(0, 1) = kI * sn * Complex(vx, -vy);
    u(1, 0) = kI * sn * Complex(vx, vy);
  }
  return std::polar(1.0, theta * c.e) * u;
}

}  // namespace

bool HwpCoefficients::IsZero(double tol) const {
  return std::abs(r) <= tol && std::abs(j) <= tol && std::abs(e) <= tol &&
         std::abs(s) <= tol;
}

HwpCoefficients UnitCoefficients(BasisMatrix m) {
  switch (m) {
    case BasisMatrix::kR: return {1.0, 0.0, 0.0, 0.0};
    case BasisMatrix::kJ: return {0.0, 1.0, 0.0, 0.0};
    case BasisMatrix::kE: return {0.0, 0.0, 1.0, 0.0};
    case BasisMatrix::kS: return {0.0, 0.0, 0.0, 1.0};
  }
  throw std::logic_error("unknown basis matrix");
}

Eigen::Matrix4cd HwpHamiltonian2q(const HwpCoefficients& c) {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(1, 1) = c.e + c.s;
  h(2, 2) = c.e - c.s;
  h(1, 2) = Complex(c.r, c.j);
  h(2, 1) = Complex(c.r, -c.j);
  return h;
}

HwpCoefficients Decompose(const Eigen::Matrix4cd& h) {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const bool central = (a == 1 || a == 2) && (b == 1 || b == 2);
      if (!central && std::abs(h(a, b)) > kShapeTol) {
        throw std::invalid_argument(
            "matrix is not of weight-preserving two-qubit form");
      }
    }
  }
  if (std::abs(h(1, 1).imag()) > kShapeTol ||
      std::abs(h(2, 2).imag()) > kShapeTol ||
      std::abs(h(1, 2) - std::conj(h(2, 1))) > kShapeTol) {
    throw std::invalid_argument("central block is not Hermitian");
  }
  const double a = h(1, 1).real();
  const double c = h(2, 2).real();
  return {h(1, 2).real(), h(1, 2).imag(), 0.5 * (a + c), 0.5 * (a - c)};
}

HwpCoefficients Gate::BsCoefficients() {
  const double x = 1.0 / (2.0 * std::sqrt(2.0));
  return {x, x, 0.5, 0.0};
}

Gate Gate::FromName(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "bs") return Bs();
  if (lower == "gr") return Gr();
  if (lower == "xy") return Xy();
  if (lower == "onsite") return Onsite();
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

std::string Gate::name() const {
  switch (kind_) {
    case GateKind::kBs: return "bs";
    case GateKind::kGr: return "gr";
    case GateKind::kXy: return "xy";
    case GateKind::kOnsite: return "onsite";
    case GateKind::kCustom: return "custom";
  }
  return "?";
}

const HwpCoefficients& Gate::coefficients() const {
  if (!is_block_form()) {
    throw std::logic_error("onsite gate has no weight-preserving block form");
  }
  return coeffs_;
}

Eigen::Matrix4cd Gate::Hamiltonian() const {
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h.block<2, 2>(1, 1) = GeneratorBlock();
  h(3, 3) = GeneratorOn11();
  return h;
}

Eigen::Matrix4cd Gate::Unitary(double theta) const {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
  u.block<2, 2>(1, 1) = BlockUnitary(theta);
  u(3, 3) = PhaseOn11(theta);
  return u;
}

Eigen::Matrix2cd Gate::GeneratorBlock() const {
  if (!is_block_form()) return Eigen::Matrix2cd::Zero();
  return HwpHamiltonian2q(coeffs_).block<2, 2>(1, 1);
}

Eigen::Matrix2cd Gate::BlockUnitary(double theta) const {
  switch (kind_) {
    case GateKind::kOnsite:
      return Eigen::Matrix2cd::Identity();
    case GateKind::kBs: {
      // H_BS is idempotent, so exp(i theta H) = I + (e^{i theta} - 1) H.
      const Complex f = std::polar(1.0, theta) - 1.0;
      return Eigen::Matrix2cd::Identity() + f * GeneratorBlock();
    }
    default:
      return PauliVectorExp(coeffs_, theta);
  }
}

Complex Gate::PhaseOn11(double theta) const {
  return is_block_form() ? Complex(1.0) : std::polar(1.0, theta);
}

PairTable BuildPairTable(const SubspaceBasis& basis, int q0, int q1) {
  CheckPair(basis, q0, q1);
  PairTable t;
  t.q0 = q0;
  t.q1 = q1;
  const Bitstring m0 = Bitstring{1} << q0;
  const Bitstring m1 = Bitstring{1} << q1;
  const auto states = basis.states();
  for (size_t idx = 0; idx < states.size(); ++idx) {
    const Bitstring b = states[idx];
    const bool b0 = (b & m0) != 0;
    const bool b1 = (b & m1) != 0;
    if (!b0 && b1) {
      t.lo.push_back(static_cast<Index>(idx));
      t.hi.push_back(basis.RankUnchecked(b ^ m0 ^ m1));
    } else if (b0 && b1) {
      t.both.push_back(static_cast<Index>(idx));
    }
  }
  return t;
}

void ApplyBlock(const PairTable& table, const Eigen::Matrix2cd& block,
                Complex phase11, Complex* data, Index rows, Index cols) {
  const Complex u00 = block(0, 0), u01 = block(0, 1);
  const Complex u10 = block(1, 0), u11 = block(1, 1);
  const size_t npairs = table.lo.size();
  for (Index c = 0; c < cols; ++c) {
    Complex* col = data + c * rows;
    for (size_t p = 0; p < npairs; ++p) {
      Complex& a = col[table.lo[p]];
      Complex& b = col[table.hi[p]];
      const Complex na = u00 * a + u01 * b;
      const Complex nb = u10 * a + u11 * b;
      a = na;
      b = nb;
    }
    if (phase11 != Complex(1.0)) {
      for (Index idx : table.both) col[idx] *= phase11;
    }
  }
}

void ApplyGate(SubspaceState& state, const GateInstance& g, double theta) {
  const PairTable table = BuildPairTable(state.basis(), g.q0, g.q1);
  Eigen::VectorXcd& amps = state.mutable_amplitudes();
  ApplyBlock(table, g.gate.BlockUnitary(theta), g.gate.PhaseOn11(theta),
             amps.data(), amps.size(), 1);
}

Eigen::MatrixXcd EmbedGenerator(const SubspaceBasis& basis,
                                const HwpCoefficients& c, int i, int j,
                                Bitstring z_mask) {
  CheckPair(basis, i, j);
  const Bitstring mi = Bitstring{1} << i;
  const Bitstring mj = Bitstring{1} << j;
  if (z_mask & (mi | mj)) {
    throw std::domain_error("Z string overlaps the gate qubits");
  }
  if (z_mask >> basis.num_qubits()) {
    throw std::domain_error("Z string references qubits out of range");
  }
  const Index d = basis.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const Complex off(c.r, c.j);  // <01|H|10>
  for (Index col = 0; col < d; ++col) {
    const Bitstring b = basis.state(col);
    const bool bi = (b & mi) != 0;
    const bool bj = (b & mj) != 0;
    if (bi == bj) continue;
    const double sign = (Popcount(b & z_mask) & 1) ? -1.0 : 1.0;
    const Index row = basis.RankUnchecked(b ^ mi ^ mj);
    if (!bi) {  // local |01>
      m(col, col) += sign * (c.e + c.s);
      m(row, col) += sign * std::conj(off);
    } else {  // local |10>
      m(col, col) += sign * (c.e - c.s);
      m(row, col) += sign * off;
    }
  }
  return m;
}

Eigen::MatrixXcd EmbedGenerator(const SubspaceBasis& basis, BasisMatrix m,
                                int i, int j, Bitstring z_mask) {
  return EmbedGenerator(basis, UnitCoefficients(m), i, j, z_mask);
}

Eigen::MatrixXcd EmbedGateHamiltonian(const SubspaceBasis& basis,
                                      const Gate& gate, int i, int j) {
  if (gate.is_block_form()) {
    return EmbedGenerator(basis, gate.coefficients(), i, j);
  }
  CheckPair(basis, i, j);
  const Bitstring both = (Bitstring{1} << i) | (Bitstring{1} << j);
  const Index d = basis.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (Index t = 0; t < d; ++t) {
    if ((basis.state(t) & both) == both) m(t, t) = 1.0;
  }
  return m;
}

}  // namespace hwp
