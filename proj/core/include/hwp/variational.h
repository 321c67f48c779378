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

// Circuit unitaries, training losses and their exact gradients.

#ifndef HWP_VARIATIONAL_H_
#define HWP_VARIATIONAL_H_

#include <string>

#include <Eigen/Dense>

#include "hwp/circuit.h"
#include "hwp/hamiltonian.h"
#include "hwp/subspace.h"

namespace hwp {

// d x d matrix whose columns are U(theta) applied to the basis states.
Eigen::MatrixXcd CircuitUnitary(const Circuit& c, const Eigen::VectorXd& theta);

// Throws std::invalid_argument if |M^dagger M - I|_max > tol.
void CheckUnitary(const Eigen::MatrixXcd& m, double tol = 1e-10);

struct LossAndGradient {
  double loss = 0.0;
  Eigen::VectorXd gradient;
};

// A differentiable scalar function of the circuit parameters.
class Objective {
 public:
  virtual ~Objective() = default;
  virtual int num_params() const = 0;
  virtual double Loss(const Eigen::VectorXd& theta) const = 0;
  // Adjoint-mode gradient; parameters shared by several gates accumulate.
  virtual LossAndGradient Evaluate(const Eigen::VectorXd& theta) const = 0;
  virtual std::string name() const = 0;
};

// 1 - |Tr(T^dagger U(theta))|^2 / d^2.
class UnitaryApproxObjective : public Objective {
 public:
  // Throws std::invalid_argument if `target` is not unitary to 1e-10 or has
  // the wrong shape.
  UnitaryApproxObjective(const Circuit& circuit, Eigen::MatrixXcd target);

  int num_params() const override { return circuit_.num_params(); }
  double Loss(const Eigen::VectorXd& theta) const override;
  LossAndGradient Evaluate(const Eigen::VectorXd& theta) const override;
  std::string name() const override { return "unitary_approx"; }

 private:
  const Circuit& circuit_;
  Eigen::MatrixXcd target_;
};

// <psi0| U^dagger H U |psi0>.
class VqeObjective : public Objective {
 public:
  VqeObjective(const Circuit& circuit, const SubspaceOperator& op,
               SubspaceState init);

  int num_params() const override { return circuit_.num_params(); }
  double Loss(const Eigen::VectorXd& theta) const override;
  LossAndGradient Evaluate(const Eigen::VectorXd& theta) const override;
  std::string name() const override { return "vqe"; }

 private:
  const Circuit& circuit_;
  const SubspaceOperator& op_;
  SubspaceState init_;
};

double LossUnitaryApprox(const Circuit& c, const Eigen::VectorXd& theta,
                         const Eigen::MatrixXcd& target);
double LossVqe(const Circuit& c, const Eigen::VectorXd& theta,
               const SubspaceOperator& op, const SubspaceState& init);

// Central differences, for testing.
Eigen::VectorXd FiniteDifferenceGradient(const Objective& f,
                                         const Eigen::VectorXd& theta,
                                         double step = 1e-5);

// Sum over columns of <lambda_col| H_g |phi_col> for the generator of gate
// `i`, where lambda and phi are column-major dim x cols arrays.
Complex GeneratorOverlap(const Circuit& c, std::size_t i,
                         const Complex* lambda, const Complex* phi,
                         Index cols);

}  // namespace hwp

#endif  // HWP_VARIATIONAL_H_
