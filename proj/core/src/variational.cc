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

#include "hwp/variational.h"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace hwp {

namespace {

constexpr Complex kI(0.0, 1.0);

// Per-gate blocks of U_g(theta)^dagger, used when walking the circuit
// backwards.
struct InverseBlocks {
  std::vector<Eigen::Matrix2cd> block;
  std::vector<Complex> phase11;
};

InverseBlocks Inverses(const Circuit& c, const Eigen::VectorXd& theta) {
  InverseBlocks inv;
  inv.block.reserve(c.num_gates());
  inv.phase11.reserve(c.num_gates());
  for (const GateInstance& g : c.gates()) {
    const double t = theta(g.param_slot);
    inv.block.push_back(g.gate.BlockUnitary(t).adjoint());
    inv.phase11.push_back(std::conj(g.gate.PhaseOn11(t)));
  }
  return inv;
}

// Walks the circuit backwards starting from phi = U(theta) psi and the
// adjoint array lambda. At gate g, `contribution` maps <lambda| i H_g phi>
// to the gradient term for the gate's slot. Both arrays are consumed.
void BackwardSweep(const Circuit& c, const Eigen::VectorXd& theta,
                   Complex* phi, Complex* lambda, Index cols,
                   const std::function<double(Complex)>& contribution,
                   Eigen::VectorXd& grad) {
  const InverseBlocks inv = Inverses(c, theta);
  const Index d = c.dim();
  for (std::size_t i = c.num_gates(); i-- > 0;) {
    const Complex ov = GeneratorOverlap(c, i, lambda, phi, cols);
    grad(c.gate(i).param_slot) += contribution(kI * ov);
    ApplyBlock(c.table(i), inv.block[i], inv.phase11[i], phi, d, cols);
    ApplyBlock(c.table(i), inv.block[i], inv.phase11[i], lambda, d, cols);
  }
}

}  // namespace

Eigen::MatrixXcd CircuitUnitary(const Circuit& c,
                                const Eigen::VectorXd& theta) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(c.dim(), c.dim());
  c.Apply(theta, u.data(), c.dim());
  return u;
}

void CheckUnitary(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  const Eigen::MatrixXcd e =
      m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  const double err = e.cwiseAbs().maxCoeff();
  if (!(err <= tol)) {
    throw std::invalid_argument("target is not unitary (error " +
                                std::to_string(err) + ")");
  }
}

Complex GeneratorOverlap(const Circuit& c, std::size_t i,
                         const Complex* lambda, const Complex* phi,
                         Index cols) {
  const Gate& gate = c.gate(i).gate;
  const PairTable& t = c.table(i);
  const Index d = c.dim();
  Complex sum = 0.0;
  if (gate.is_block_form()) {
    const Eigen::Matrix2cd h = gate.GeneratorBlock();
    const Complex h00 = h(0, 0), h01 = h(0, 1), h10 = h(1, 0), h11 = h(1, 1);
    for (Index col = 0; col < cols; ++col) {
      const Complex* l = lambda + col * d;
      const Complex* p = phi + col * d;
      for (std::size_t k = 0; k < t.lo.size(); ++k) {
        const Complex a = p[t.lo[k]], b = p[t.hi[k]];
        sum += std::conj(l[t.lo[k]]) * (h00 * a + h01 * b) +
               std::conj(l[t.hi[k]]) * (h10 * a + h11 * b);
      }
    }
  } else {
    for (Index col = 0; col < cols; ++col) {
      const Complex* l = lambda + col * d;
      const Complex* p = phi + col * d;
      for (Index idx : t.both) sum += std::conj(l[idx]) * p[idx];
    }
  }
  return sum;
}

UnitaryApproxObjective::UnitaryApproxObjective(const Circuit& circuit,
                                               Eigen::MatrixXcd target)
    : circuit_(circuit), target_(std::move(target)) {
  if (target_.rows() != circuit_.dim() || target_.cols() != circuit_.dim()) {
    throw std::invalid_argument("target shape does not match the sector");
  }
  CheckUnitary(target_);
}

double UnitaryApproxObjective::Loss(const Eigen::VectorXd& theta) const {
  const Eigen::MatrixXcd u = CircuitUnitary(circuit_, theta);
  const double d = static_cast<double>(circuit_.dim());
  const Complex tau = (target_.adjoint() * u).trace();
  return 1.0 - std::norm(tau) / (d * d);
}

LossAndGradient UnitaryApproxObjective::Evaluate(
    const Eigen::VectorXd& theta) const {
  const Index d = circuit_.dim();
  const double dd = static_cast<double>(d) * static_cast<double>(d);
  Eigen::MatrixXcd x = CircuitUnitary(circuit_, theta);
  // tau = Tr(T^dagger U) = <T, U>_F. Walking back, the pair (T_l, X_l) with
  // T_l = U_{>l}^dagger T and X_l = U_{<=l} gives d tau = <T_l, i H_l X_l>.
  const Complex tau = target_.conjugate().cwiseProduct(x).sum();
  LossAndGradient out;
  out.loss = 1.0 - std::norm(tau) / dd;
  out.gradient = Eigen::VectorXd::Zero(circuit_.num_params());
  Eigen::MatrixXcd lam = target_;
  BackwardSweep(
      circuit_, theta, x.data(), lam.data(), d,
      [&](Complex dtau) { return -2.0 * (std::conj(tau) * dtau).real() / dd; },
      out.gradient);
  return out;
}

VqeObjective::VqeObjective(const Circuit& circuit, const SubspaceOperator& op,
                           SubspaceState init)
    : circuit_(circuit), op_(op), init_(std::move(init)) {
  if (!init_.basis().SameSector(circuit_.basis()) ||
      !op_.basis().SameSector(circuit_.basis())) {
    throw std::domain_error("VQE pieces live in different sectors");
  }
}

double VqeObjective::Loss(const Eigen::VectorXd& theta) const {
  Eigen::VectorXcd psi = init_.amplitudes();
  circuit_.Apply(theta, psi.data(), 1);
  return op_.Expectation(psi).real();
}

LossAndGradient VqeObjective::Evaluate(const Eigen::VectorXd& theta) const {
  Eigen::VectorXcd phi = init_.amplitudes();
  circuit_.Apply(theta, phi.data(), 1);
  Eigen::VectorXcd lam = op_.Apply(phi);
  LossAndGradient out;
  out.loss = phi.dot(lam).real();
  out.gradient = Eigen::VectorXd::Zero(circuit_.num_params());
  // dE = 2 Re <H U psi| i H_l U_{<=l} psi> carried back to gate l.
  BackwardSweep(
      circuit_, theta, phi.data(), lam.data(), 1,
      [](Complex v) { return 2.0 * v.real(); }, out.gradient);
  return out;
}

double LossUnitaryApprox(const Circuit& c, const Eigen::VectorXd& theta,
                         const Eigen::MatrixXcd& target) {
  return UnitaryApproxObjective(c, target).Loss(theta);
}

double LossVqe(const Circuit& c, const Eigen::VectorXd& theta,
               const SubspaceOperator& op, const SubspaceState& init) {
  return VqeObjective(c, op, init).Loss(theta);
}

Eigen::VectorXd FiniteDifferenceGradient(const Objective& f,
                                         const Eigen::VectorXd& theta,
                                         double step) {
  Eigen::VectorXd g(theta.size());
  Eigen::VectorXd t = theta;
  for (Index i = 0; i < theta.size(); ++i) {
    t(i) = theta(i) + step;
    const double up = f.Loss(t);
    t(i) = theta(i) - step;
    const double down = f.Loss(t);
    t(i) = theta(i);
    g(i) = (up - down) / (2.0 * step);
  }
  return g;
}

}  // namespace hwp
