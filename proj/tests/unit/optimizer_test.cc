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
#include <limits>

#include <gtest/gtest.h>

#include "hwp/haar.h"
#include "hwp/variational.h"

namespace hwp {
namespace {

// sum_i w_i (theta_i - c_i)^2 with a known minimum of `floor`.
class Quadratic : public Objective {
 public:
  Quadratic(Eigen::VectorXd c, double floor) : c_(std::move(c)), floor_(floor) {}
  int num_params() const override { return static_cast<int>(c_.size()); }
  double Loss(const Eigen::VectorXd& t) const override {
    return floor_ + (t - c_).squaredNorm();
  }
  LossAndGradient Evaluate(const Eigen::VectorXd& t) const override {
    return {Loss(t), 2.0 * (t - c_)};
  }
  std::string name() const override { return "quadratic"; }

 private:
  Eigen::VectorXd c_;
  double floor_;
};

class Constant : public Objective {
 public:
  explicit Constant(double v) : v_(v) {}
  int num_params() const override { return 3; }
  double Loss(const Eigen::VectorXd&) const override { return v_; }
  LossAndGradient Evaluate(const Eigen::VectorXd&) const override {
    return {v_, Eigen::VectorXd::Zero(3)};
  }
  std::string name() const override { return "constant"; }

 private:
  double v_;
};

TEST(OptimizerConfigTest, Validation) {
  OptimizerConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.learning_rate = 0.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = {};
  c.max_iters = 0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = {};
  c.target_loss = -1.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
}

TEST(OptimizerTest, InitialParametersInRangeAndSeeded) {
  const Eigen::VectorXd a = InitialParameters(500, 0.3, 17);
  EXPECT_LE(a.cwiseAbs().maxCoeff(), 0.3);
  EXPECT_EQ(a, InitialParameters(500, 0.3, 17));
  EXPECT_NE(a, InitialParameters(500, 0.3, 18));
}

TEST(OptimizerTest, QuadraticConverges) {
  Eigen::VectorXd c(4);
  c << 0.1, -0.2, 0.05, 0.3;
  Quadratic f(c, 0.0);
  OptimizerConfig cfg;
  cfg.target_loss = 1e-12;
  cfg.max_iters = 5000;
  const TrainResult r = Optimize(f, cfg, 3);
  EXPECT_EQ(r.stop_reason, "target_loss");
  EXPECT_LE(r.final_loss, 1e-12);
  EXPECT_EQ(static_cast<int>(r.loss_history.size()), r.iterations);
  for (size_t i = 1; i < r.loss_history.size(); ++i) {
    EXPECT_LE(r.loss_history[i], r.loss_history[i - 1]);
  }
  EXPECT_NEAR(f.Loss(r.final_params), r.final_loss, 1e-15);
}

TEST(OptimizerTest, LossOffsetMakesTargetAnExcess) {
  Eigen::VectorXd c = Eigen::VectorXd::Constant(2, 0.2);
  Quadratic f(c, -3.0);
  OptimizerConfig cfg;
  cfg.loss_offset = -3.0;
  cfg.target_loss = 1e-10;
  cfg.max_iters = 5000;
  const TrainResult r = Optimize(f, cfg, 1);
  EXPECT_EQ(r.stop_reason, "target_loss");
  EXPECT_LE(r.final_loss + 3.0, 1e-10);
}

TEST(OptimizerTest, StopsOnFlatGradientAndIterationCap) {
  OptimizerConfig cfg;
  const TrainResult flat = Optimize(Constant(1.0), cfg, 0);
  EXPECT_EQ(flat.stop_reason, "grad_tol");
  EXPECT_EQ(flat.iterations, 1);
  Quadratic f(Eigen::VectorXd::Constant(3, 5.0), 0.0);
  cfg.max_iters = 7;
  const TrainResult capped = Optimize(f, cfg, 0);
  EXPECT_EQ(capped.stop_reason, "max_iters");
  EXPECT_EQ(capped.iterations, 7);
}

TEST(OptimizerTest, NonFiniteLossAborts) {
  OptimizerConfig cfg;
  EXPECT_THROW(Optimize(Constant(std::numeric_limits<double>::quiet_NaN()),
                        cfg, 0),
               NonFiniteLoss);
}

TEST(OptimizerTest, IdentityTargetReachedByBsRing) {
  AnsatzSpec spec;
  spec.num_params = 50;
  const Circuit c = BuildAnsatz(spec, SubspaceBasis::Make(5, 1));
  UnitaryApproxObjective f(c, Eigen::MatrixXcd::Identity(5, 5));
  OptimizerConfig cfg;
  cfg.target_loss = 1e-10;
  const TrainResult r = Optimize(f, cfg, 0);
  EXPECT_LE(r.final_loss, 1e-10);
  EXPECT_LE(r.iterations, 2000);
}

TEST(OptimizerTest, DeterministicPerSeed) {
  AnsatzSpec spec;
  spec.num_params = 20;
  const Circuit c = BuildAnsatz(spec, SubspaceBasis::Make(4, 1));
  UnitaryApproxObjective f(c, HaarRandomUnitary(4, 99));
  OptimizerConfig cfg;
  cfg.max_iters = 100;
  const TrainResult a = Optimize(f, cfg, 5), b = Optimize(f, cfg, 5);
  EXPECT_EQ(a.loss_history, b.loss_history);
  EXPECT_EQ(a.final_params, b.final_params);
  EXPECT_EQ(a.seed, 5u);
  EXPECT_NE(Optimize(f, cfg, 6).loss_history, a.loss_history);
}

}  // namespace
}  // namespace hwp
