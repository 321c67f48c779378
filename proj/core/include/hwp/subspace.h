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

#ifndef HWP_SUBSPACE_H_
#define HWP_SUBSPACE_H_

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace hwp {

using Complex = std::complex<double>;
using Bitstring = std::uint32_t;
using Index = std::int64_t;

inline constexpr int kMaxQubits = 24;

// Exact binomial coefficient for 0 <= k <= n <= kMaxQubits. Throws
// std::domain_error outside that range.
std::int64_t Dimension(int n, int k);

// Number of set bits.
inline int Popcount(Bitstring b) { return __builtin_popcount(b); }

// Renders qubit n-1 first, so qubit 0 is the rightmost character.
std::string FormatBitstring(Bitstring b, int n);
Bitstring ParseBitstring(std::string_view text);

// The fixed-Hamming-weight sector of n qubits: all n-bit strings with exactly
// k ones, ordered by ascending integer value (qubit 0 is the LSB). Immutable
// after construction and safe to share between threads.
class SubspaceBasis {
 public:
  SubspaceBasis(int n, int k);

  static std::shared_ptr<const SubspaceBasis> Make(int n, int k) {
    return std::make_shared<const SubspaceBasis>(n, k);
  }

  int num_qubits() const { return n_; }
  int weight() const { return k_; }
  Index dim() const { return static_cast<Index>(states_.size()); }

  std::span<const Bitstring> states() const { return states_; }
  Bitstring state(Index i) const { return states_[static_cast<size_t>(i)]; }

  // Combinatorial number system rank; O(n), no search. Throws
  // std::domain_error if `b` is out of range or has the wrong weight.
  Index Rank(Bitstring b) const;
  // Same as Rank() but without validation, for inner loops.
  Index RankUnchecked(Bitstring b) const;
  Bitstring Unrank(Index index) const;

  bool Contains(Bitstring b) const;
  bool SameSector(const SubspaceBasis& other) const {
    return n_ == other.n_ && k_ == other.k_;
  }

 private:
  int n_;
  int k_;
  std::vector<Bitstring> states_;
  // binom_[p][t] = C(p, t) for p <= n, t <= k + 1.
  std::vector<std::vector<std::int64_t>> binom_;
};

using BasisPtr = std::shared_ptr<const SubspaceBasis>;

// Enumerates the weight-k strings in ascending integer order.
std::vector<Bitstring> EnumerateBasis(int n, int k);

// A pure state restricted to one sector.
class SubspaceState {
 public:
  explicit SubspaceState(BasisPtr basis);
  SubspaceState(BasisPtr basis, Eigen::VectorXcd amplitudes);

  static SubspaceState BasisState(BasisPtr basis, Bitstring b);

  const SubspaceBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  Index dim() const { return amplitudes_.size(); }

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXcd& mutable_amplitudes() { return amplitudes_; }

  Complex amplitude(Bitstring b) const { return amplitudes_(basis_->Rank(b)); }
  double Norm() const { return amplitudes_.norm(); }
  void Normalize();

 private:
  BasisPtr basis_;
  Eigen::VectorXcd amplitudes_;
};

// <a|b>, conjugating `a`. Throws std::domain_error when the sectors differ.
Complex InnerProduct(const SubspaceState& a, const SubspaceState& b);

}  // namespace hwp

#endif  // HWP_SUBSPACE_H_
