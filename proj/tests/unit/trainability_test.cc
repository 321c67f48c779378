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


#include "hwp/trainability.h"

#include <cmath>

#include <gtest/gtest.h>

#include "oracle.h"

namespace hwp {
namespace {

TEST(TheoreticalVarianceTest, KnownValueAndSymmetry) {
  EXPECT_NEAR(TheoreticalVariance(4, 1).exact, 2304.0 / 14400.0, 1e-15);
  for (int n = 3; n <= 10; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto a = TheoreticalVariance(n, k), b = TheoreticalVariance(n, n - k);
      EXPECT_DOUBLE_EQ(a.exact, b.exact);
      EXPECT_DOUBLE_EQ(a.approx, b.approx);
    }
  }
  // At half filling the polynomial prefactor is one.
  for (int n : {4, 6, 8, 10}) {
    EXPECT_NEAR(TheoreticalVariance(n, n / 2).approx,
                1.0 / static_cast<double>(Dimension(n, n / 2)), 1e-15);
  }
  EXPECT_THROW(TheoreticalVariance(4, 0), std::domain_error);
}

TEST(TheoreticalVarianceTest, ExactApproachesApprox) {
  const auto v = TheoreticalVariance(6, 3);  // d = 20
  EXPECT_NEAR(v.exact / v.approx, 1.0, 0.3);
}

TEST(TraceTest, SmallExample) {
  const TraceValues t = ComputeTraces(4, 1);
  EXPECT_NEAR(t.tr_o, 2.0, 1e-12);
  EXPECT_NEAR(t.tr_o2, 4.0, 1e-12);
  EXPECT_NEAR(t.tr_h2, 2.0, 1e-12);
}

TEST(TraceTest, IdentitiesHoldUpToEightQubits) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const TraceValues got = ComputeTraces(n, k);
      const TraceValues want = ExpectedTraces(n, k);
      EXPECT_NEAR(got.tr_o, want.tr_o, 1e-10) << n << "," << k;
      EXPECT_NEAR(got.tr_o2, want.tr_o2, 1e-10) << n << "," << k;
      EXPECT_NEAR(got.tr_h2, want.tr_h2, 1e-10) << n << "," << k;
    }
  }
}

// Traces of the restricted full-space Z_0 and probe generator.
TEST(TraceTest, AgreesWithFullSpaceRestriction) {
  for (int n = 3; n <= 6; ++n) {
    std::string ops(static_cast<size_t>(n), 'I');
    ops[0] = 'Z';
    const oracle::Dense z0 = oracle::PauliKron(ops);
    for (int k = 1; k < n; ++k) {
      for (ProbeGate p : {ProbeGate::kNormalized, ProbeGate::kBs}) {
        const oracle::Dense o = oracle::Restrict(z0, n, k);
        const oracle::Dense h = oracle::Restrict(
            oracle::EmbedTwoQubit(n, HwpHamiltonian2q(ProbeCoefficients(p)), 0, 1),
            n, k);
        const TraceValues t = ComputeTraces(n, k, p);
        EXPECT_NEAR(t.tr_o, o.trace().real(), 1e-12);
        EXPECT_NEAR(t.tr_o2, (o * o).trace().real(), 1e-12);
        EXPECT_NEAR(t.tr_h2, (h * h).trace().real(), 1e-12);
        EXPECT_NEAR(t.tr_h, h.trace().real(), 1e-12);
      }
    }
  }
}

// The BS generator is a projector on one exchange direction, so its squared
// trace is half of the normalized probe's.
TEST(TraceTest, BsProbeHasHalfTheWeight) {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_NEAR(ComputeTraces(n, k, ProbeGate::kBs).tr_h2,
                  0.5 * ExpectedTraces(n, k).tr_h2, 1e-12);
    }
  }
}

TEST(HaarVarianceTest, NormalizedProbeReproducesClosedForm) {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_NEAR(HaarVariance(n, k, ComputeTraces(n, k)),
                  TheoreticalVariance(n, k).exact, 1e-13)
          << n << "," << k;
    }
  }
}

TEST(SampleVarianceTest, SmallSectorWithinBand) {
  VarianceConfig c;
  c.n = 4;
  c.k = 1;
  c.samples = 2000;
  c.seed = 1;
  const VarianceReport r = SampleGradientVariance(c);
  EXPECT_GE(r.ratio, 0.75);
  EXPECT_LE(r.ratio, 1.25);
  EXPECT_NEAR(r.mean, 0.0, 3 * r.mean_stderr);
  EXPECT_DOUBLE_EQ(r.exact_formula, 0.16);
  EXPECT_EQ(r.probe_index, r.num_gates / 2);
  EXPECT_EQ(r.num_gates, 100 * 6);
}

TEST(SampleVarianceTest, ScheduleIndependent) {
  VarianceConfig c;
  c.n = 5;
  c.k = 2;
  c.samples = 64;
  c.depth = 10;
  c.seed = 3;
  const VarianceReport a = SampleGradientVariance(c);
  c.jobs = 3;
  const VarianceReport b = SampleGradientVariance(c);
  EXPECT_EQ(a.empirical_var, b.empirical_var);
  EXPECT_EQ(a.mean, b.mean);
}

// With the BS generator itself as the probe, the half-filled sector has the
// smaller variance, matching its Haar-limit value.
TEST(SampleVarianceTest, HalfFillingHasSmallerBsGradientVariance) {
  VarianceConfig c;
  c.n = 6;
  c.samples = 8000;
  c.probe = ProbeGate::kBs;
  c.seed = 11;
  c.k = 3;
  const VarianceReport half = SampleGradientVariance(c);
  c.k = 1;
  const VarianceReport single = SampleGradientVariance(c);
  EXPECT_LT(half.haar_formula, single.haar_formula);
  EXPECT_LT(half.empirical_var, single.empirical_var);
  EXPECT_NEAR(half.empirical_var / half.haar_formula, 1.0, 0.25);
  EXPECT_NEAR(single.empirical_var / single.haar_formula, 1.0, 0.25);
}

TEST(SampleVarianceTest, Validation) {
  VarianceConfig c;
  c.samples = 1;
  EXPECT_THROW(SampleGradientVariance(c), std::invalid_argument);
  c.samples = 10;
  c.depth = 0;
  EXPECT_THROW(SampleGradientVariance(c), std::invalid_argument);
  EXPECT_THROW(ParseProbeGate("cnot"), std::invalid_argument);
}

}  // namespace
}  // namespace hwp
