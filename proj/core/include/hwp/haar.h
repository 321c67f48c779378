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

// Random number streams and Haar-distributed unitaries.

#ifndef HWP_HAAR_H_
#define HWP_HAAR_H_

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace hwp {

// Independent, reproducible generator for (seed, stream); trials and samples
// each take their own stream so results do not depend on scheduling.
std::mt19937_64 MakeRng(std::uint64_t seed, std::uint64_t stream = 0);

// QR of a complex Ginibre matrix with the phases of diag(R) moved into Q.
Eigen::MatrixXcd HaarRandomUnitary(int d, std::mt19937_64& rng);
Eigen::MatrixXcd HaarRandomUnitary(int d, std::uint64_t seed);

}  // namespace hwp

#endif  // HWP_HAAR_H_
