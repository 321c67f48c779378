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

// Dynamical Lie algebra of weight-preserving gate sets restricted to one
// Hamming-weight sector.

#ifndef HWP_LIE_H_
#define HWP_LIE_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hwp/gates.h"
#include "hwp/subspace.h"

namespace hwp {

enum class Topology { kFullyConnected, kNearestNeighborRing };

// "fc" / "nn".
Topology ParseTopology(std::string_view text);
std::string TopologyName(Topology t);

// Ordered qubit pairs: FC gives n(n-1); the ring gives (i, i+1) and (i+1, i)
// for every edge, 2n pairs for n >= 3.
std::vector<std::pair<int, int>> OrderedPairs(Topology t, int n);

struct GeneratorSet {
  BasisPtr basis;
  std::vector<Eigen::MatrixXcd> generators;  // anti-Hermitian
};

// One generator i H(c) per ordered pair of the topology. Throws
// std::domain_error for all-zero coefficients.
GeneratorSet GeneratorsFromCoefficients(BasisPtr basis,
                                        const HwpCoefficients& c,
                                        Topology topology);

struct DlaResult {
  std::int64_t dim = 0;
  std::int64_t closure_basis_size = 0;
  std::int64_t iterations = 0;  // commutators evaluated
};

inline constexpr double kDefaultDlaTolerance = 1e-9;

// Dimension of the Lie closure. Elements are vectorised and kept as an
// orthonormal set; a commutator is admitted when its residual after
// projection exceeds tol * |commutator|. Each admitted element is bracketed
// with every earlier one, so the loop ends once a sweep admits nothing or the
// dimension reaches d^2.
DlaResult DlaDimension(const GeneratorSet& gs,
                       double tol = kDefaultDlaTolerance);

// Which of r, j, e, s are nonzero.
struct CoefficientFlags {
  bool r = false;
  bool j = false;
  bool e = false;
  bool s = false;

  static CoefficientFlags Of(const HwpCoefficients& c, double tol = 1e-12);
  // Bit 3 = r, bit 2 = j, bit 1 = e, bit 0 = s.
  static CoefficientFlags FromMask(unsigned mask);
  unsigned mask() const;
  bool any() const { return r || j || e || s; }
  // Unit coefficients on the flagged components.
  HwpCoefficients Unit() const;
  // e.g. "r+j+e".
  std::string Label() const;
};

// All 15 nonzero configurations, in mask order 1..15.
std::vector<CoefficientFlags> AllConfigurations();

// Roman-numeral type of the FC closure (1..8).
int DlaType(const CoefficientFlags& flags);

class UnsupportedCase : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Closed-form dimension from the classification of the fifteen
// configurations. Requires n >= 3 and 1 <= k <= n - 1. Nearest-neighbour
// connectivity is only answered for configurations whose dimension is
// proven there; anything else throws UnsupportedCase.
std::int64_t PredictedDimension(const CoefficientFlags& flags, int n, int k,
                                Topology topology);

// Universality in every sector with n >= 3, |x| > 1e-12 meaning nonzero.
// A single sector can still reach dimension d^2 when this is false.
//   FC: (e and j) or (e and r and s)
//   NN: (e and j and r) or (e and j and s) or (e and r and s)
bool IsUniversal(const HwpCoefficients& c, Topology topology);

Eigen::MatrixXcd Commutator(const Eigen::MatrixXcd& a,
                            const Eigen::MatrixXcd& b);

}  // namespace hwp

#endif  // HWP_LIE_H_
