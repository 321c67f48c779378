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

#include "hwp/optimizer.h"

#include <cmath>
#include <stdexcept>

#include "hwp/haar.h"

namespace hwp {

void OptimizerConfig::Validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(learning_rate > 0.0, "learning rate must be positive");
  require(beta1 >= 0.0 && beta1 < 1.0, "beta1 must lie in [0, 1)");
  require(beta2 >= 0.0 && beta2 < 1.0, "beta2 must lie in [0, 1)");
  require(epsilon > 0.0, "epsilon must be positive");
  require(max_iters >= 1, "max_iters must be >= 1");
  require(target_loss >= 0.0, "target loss must be >= 0");
  require(grad_tol >= 0.0, "gradient tolerance must be >= 0");
  require(plateau_window >= 1, "plateau window must be >= 1");
  require(decay > 0.0 && decay <= 1.0, "decay must lie in (0, 1]");
  require(init_scale >= 0.0, "init scale must be >= 0");
}

Eigen::VectorXd InitialParameters(int num_params, double scale,
                                  std::uint64_t seed) {
  std::mt19937_64 rng = MakeRng(seed, 1);
  std::uniform_real_distribution<double> u(-scale, scale);
  Eigen::VectorXd theta(num_params);
  for (int i = 0; i < num_params; ++i) theta(i) = u(rng);
  return theta;
}

TrainResult Optimize(const Objective& f, const OptimizerConfig& config,
                     std::uint64_t seed) {
  config.Validate();
  return OptimizeFrom(
      f, config, InitialParameters(f.num_params(), config.init_scale, seed),
      seed);
}

TrainResult OptimizeFrom(const Objective& f, const OptimizerConfig& config,
                         Eigen::VectorXd theta, std::uint64_t seed) {
  config.Validate();
  if (theta.size() != f.num_params()) {
    throw std::domain_error("initial point has the wrong length");
  }
  const Index n = theta.size();
  Eigen::VectorXd m = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  double rate = config.learning_rate;
  double b1t = 1.0, b2t = 1.0;

  TrainResult r;
  r.seed = seed;
  r.final_params = theta;
  r.stop_reason = "max_iters";
  double window_ref = std::numeric_limits<double>::infinity();
  int since_ref = 0;

  for (int it = 0; it < config.max_iters; ++it) {
    const LossAndGradient lg = f.Evaluate(theta);
    if (!std::isfinite(lg.loss) || !lg.gradient.allFinite()) {
      throw NonFiniteLoss("non-finite loss or gradient at iteration " +
                          std::to_string(it) + " (seed " +
                          std::to_string(seed) + ")");
    }
    r.iterations = it + 1;
    if (lg.loss < r.final_loss) {
      r.final_loss = lg.loss;
      r.final_params = theta;
    }
    r.loss_history.push_back(r.final_loss);

    const double excess = r.final_loss - config.loss_offset;
    if (excess <= config.target_loss) {
      r.stop_reason = "target_loss";
      break;
    }
    if (lg.gradient.norm() < config.grad_tol) {
      r.stop_reason = "grad_tol";
      break;
    }
    if (excess < window_ref * (1.0 - config.plateau_improvement)) {
      window_ref = excess;
      since_ref = 0;
    } else if (++since_ref >= config.plateau_window) {
      rate *= config.decay;
      since_ref = 0;
      window_ref = excess;
    }

    b1t *= config.beta1;
    b2t *= config.beta2;
    m = config.beta1 * m + (1.0 - config.beta1) * lg.gradient;
    v = config.beta2 * v +
        (1.0 - config.beta2) * lg.gradient.cwiseProduct(lg.gradient);
    const Eigen::ArrayXd mhat = m.array() / (1.0 - b1t);
    const Eigen::ArrayXd vhat = v.array() / (1.0 - b2t);
    theta.array() -= rate * mhat / (vhat.sqrt() + config.epsilon);
  }
  return r;
}

}  // namespace hwp
