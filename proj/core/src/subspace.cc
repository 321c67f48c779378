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

#include "hwp/subspace.h"

#include <stdexcept>
#include <utility>

namespace hwp {

namespace {

void CheckSector(int n, int k) {
  if (n < 0 || n > kMaxQubits || k < 0 || k > n) {
    throw std::domain_error("invalid sector (n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

std::int64_t Dimension(int n, int k) {
  CheckSector(n, k);
  if (k > n - k) k = n - k;
  std::int64_t c = 1;
  // Each partial product is itself a binomial coefficient, so the division is
  // exact and nothing exceeds C(24, 12).
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

std::string FormatBitstring(Bitstring b, int n) {
  std::string s(static_cast<size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if ((b >> q) & 1u) s[static_cast<size_t>(n - 1 - q)] = '1';
  }
  return s;
}

Bitstring ParseBitstring(std::string_view text) {
  if (text.empty() || text.size() > static_cast<size_t>(kMaxQubits)) {
    throw std::domain_error("bitstring length out of range");
  }
  Bitstring b = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::domain_error("bitstring must contain only 0 and 1");
    }
    b = (b << 1) | static_cast<Bitstring>(c - '0');
  }
  return b;
}

std::vector<Bitstring> EnumerateBasis(int n, int k) {
  CheckSector(n, k);
  std::vector<Bitstring> out;
  out.reserve(static_cast<size_t>(Dimension(n, k)));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack walks weight-k words in increasing order.
  Bitstring v = (Bitstring{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (v < limit) {
    out.push_back(v);
    const Bitstring t = v | (v - 1);
    const std::uint64_t next =
        (static_cast<std::uint64_t>(t) + 1) |
        (((~t & -~t) - 1) >> (__builtin_ctz(v) + 1));
    if (next >= limit) break;
    v = static_cast<Bitstring>(next);
  }
  return out;
}

SubspaceBasis::SubspaceBasis(int n, int k) : n_(n), k_(k) {
  CheckSector(n, k);
  states_ = EnumerateBasis(n, k);
  binom_.assign(static_cast<size_t>(n + 1),
                std::vector<std::int64_t>(static_cast<size_t>(k + 2), 0));
  for (int p = 0; p <= n; ++p) {
    binom_[p][0] = 1;
    for (int t = 1; t <= k + 1; ++t) {
      binom_[p][t] = p == 0 ? 0 : binom_[p - 1][t - 1] + binom_[p - 1][t];
    }
  }
}

bool SubspaceBasis::Contains(Bitstring b) const {
  return (b >> n_) == 0 && Popcount(b) == k_;
}

Index SubspaceBasis::RankUnchecked(Bitstring b) const {
  Index r = 0;
  int t = 1;
  while (b != 0) {
    const int p = __builtin_ctz(b);
    r += binom_[static_cast<size_t>(p)][static_cast<size_t>(t)];
    ++t;
    b &= b - 1;
  }
  return r;
}

Index SubspaceBasis::Rank(Bitstring b) const {
  if (!Contains(b)) {
    throw std::domain_error("bitstring " + FormatBitstring(b, n_) +
                            " is not in the weight-" + std::to_string(k_) +
                            " sector");
  }
  return RankUnchecked(b);
}

Bitstring SubspaceBasis::Unrank(Index index) const {
  if (index < 0 || index >= dim()) {
    throw std::domain_error("rank " + std::to_string(index) +
                            " out of range for sector dimension " +
                            std::to_string(dim()));
  }
  Bitstring b = 0;
  int p = n_ - 1;
  for (int t = k_; t >= 1; --t) {
    while (binom_[static_cast<size_t>(p)][static_cast<size_t>(t)] > index) --p;
    index -= binom_[static_cast<size_t>(p)][static_cast<size_t>(t)];
    b |= Bitstring{1} << p;
    --p;
  }
  return b;
}

SubspaceState::SubspaceState(BasisPtr basis)
    : basis_(std::move(basis)),
      amplitudes_(Eigen::VectorXcd::Zero(basis_->dim())) {}

SubspaceState::SubspaceState(BasisPtr basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != basis_->dim()) {
    throw std::domain_error("amplitude vector length does not match sector");
  }
}

SubspaceState SubspaceState::BasisState(BasisPtr basis, Bitstring b) {
  SubspaceState s(std::move(basis));
  s.amplitudes_(s.basis_->Rank(b)) = 1.0;
  return s;
}

void SubspaceState::Normalize() {
  const double norm = amplitudes_.norm();
  if (norm == 0.0) throw std::domain_error("cannot normalize a zero state");
  amplitudes_ /= norm;
}

Complex InnerProduct(const SubspaceState& a, const SubspaceState& b) {
  if (!a.basis().SameSector(b.basis())) {
    throw std::domain_error("inner product between different sectors");
  }
  return a.amplitudes().dot(b.amplitudes());
}

}  // namespace hwp
