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

// Adam with step decay on plateaus.

#ifndef HWP_OPTIMIZER_H_
#define HWP_OPTIMIZER_H_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hwp/variational.h"

namespace hwp {

struct OptimizerConfig {
  double learning_rate = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int max_iters = 2000;
  // Stops once loss - loss_offset <= target_loss. For VQE the offset is the
  // exact ground energy so the target is an energy error.
  double target_loss = 0.0;
  double loss_offset = 0.0;
  double grad_tol = 1e-12;
  // The rate is multiplied by `decay` whenever the best excess loss has not
  // dropped by a factor (1 - plateau_improvement) for plateau_window steps.
  int plateau_window = 200;
  double plateau_improvement = 1e-2;
  double decay = 0.5;
  // Initial parameters ~ Uniform(-init_scale, init_scale).
  double init_scale = 0.3141592653589793;

  // Throws std::invalid_argument.
  void Validate() const;
};

struct TrainResult {
  double final_loss = std::numeric_limits<double>::infinity();
  // Best loss seen after each iteration (non-increasing).
  std::vector<double> loss_history;
  Eigen::VectorXd final_params;
  int iterations = 0;
  std::uint64_t seed = 0;
  std::string stop_reason;
};

class NonFiniteLoss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Eigen::VectorXd InitialParameters(int num_params, double scale,
                                  std::uint64_t seed);

// Draws the initial point from `seed` and runs Adam. final_params is the
// best point visited. Throws NonFiniteLoss if the loss becomes NaN or inf.
TrainResult Optimize(const Objective& f, const OptimizerConfig& config,
                     std::uint64_t seed);
TrainResult OptimizeFrom(const Objective& f, const OptimizerConfig& config,
                         Eigen::VectorXd start, std::uint64_t seed = 0);

}  // namespace hwp

#endif  // HWP_OPTIMIZER_H_
