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

#include "hwp/lie.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace hwp {

namespace {

constexpr double kNonzero = 1e-12;
// Commutators below this Frobenius norm are treated as exact zeros. Closure
// elements are kept at unit norm, so genuine brackets are O(1).
constexpr double kZeroBracket = 1e-10;
const double kSqrt2 = std::sqrt(2.0);

bool Nz(double x) { return std::abs(x) > kNonzero; }

// Real coordinates of a Hermitian d x d matrix: the diagonal, then
// sqrt(2) Re and sqrt(2) Im of the strict upper triangle. The map is an
// isometry from (Hermitian, Tr(AB)) onto R^{d^2}.
void PackHermitian(const Eigen::MatrixXcd& h, double* out) {
  const Index d = h.rows();
  Index p = 0;
  for (Index a = 0; a < d; ++a) out[p++] = h(a, a).real();
  for (Index b = 1; b < d; ++b) {
    for (Index a = 0; a < b; ++a) {
      out[p++] = kSqrt2 * h(a, b).real();
      out[p++] = kSqrt2 * h(a, b).imag();
    }
  }
}

Eigen::MatrixXcd UnpackHermitian(const double* v, Index d) {
  Eigen::MatrixXcd h(d, d);
  Index p = 0;
  for (Index a = 0; a < d; ++a) h(a, a) = v[p++];
  for (Index b = 1; b < d; ++b) {
    for (Index a = 0; a < b; ++a) {
      const double re = v[p++] / kSqrt2;
      const double im = v[p++] / kSqrt2;
      h(a, b) = Complex(re, im);
      h(b, a) = Complex(re, -im);
    }
  }
  return h;
}

// Orthonormal set of packed Hermitian matrices, grown column by column.
class SpanTracker {
 public:
  SpanTracker(Index length, double tol) : length_(length), tol_(tol) {
    q_.resize(length_, std::min<Index>(length_, 64));
  }

  Index size() const { return size_; }
  Index capacity_limit() const { return length_; }
  const double* column(Index i) const { return q_.col(i).data(); }

  // Projects the candidate columns against the current basis. Returns the
  // residual block.
  Eigen::MatrixXd Residuals(const Eigen::MatrixXd& cand) const {
    if (size_ == 0) return cand;
    const auto basis = q_.leftCols(size_);
    Eigen::MatrixXd coeff = basis.transpose() * cand;
    return cand - basis * coeff;
  }

  // `v` has already been projected against columns [0, from). Finishes the
  // projection, and admits the normalised residual if it is large enough.
  bool TryAdmit(Eigen::Ref<Eigen::VectorXd> v, Index from, double ref_norm) {
    for (Index c = from; c < size_; ++c) {
      v -= q_.col(c).dot(v) * q_.col(c);
    }
    if (v.norm() <= tol_ * ref_norm) return false;
    // Second pass keeps the basis orthonormal to working precision.
    if (size_ > 0) {
      const auto basis = q_.leftCols(size_);
      v -= basis * (basis.transpose() * v);
    }
    const double nv = v.norm();
    if (nv <= tol_ * ref_norm) return false;
    if (size_ == q_.cols()) {
      q_.conservativeResize(Eigen::NoChange,
                            std::min<Index>(length_, 2 * q_.cols()));
    }
    q_.col(size_) = v / nv;
    ++size_;
    return true;
  }

 private:
  Index length_;
  double tol_;
  Eigen::MatrixXd q_;
  Index size_ = 0;
};

}  // namespace

Topology ParseTopology(std::string_view text) {
  if (text == "fc" || text == "FC") return Topology::kFullyConnected;
  if (text == "nn" || text == "NN") return Topology::kNearestNeighborRing;
  throw std::invalid_argument("unknown topology '" + std::string(text) +
                              "' (expected fc or nn)");
}

std::string TopologyName(Topology t) {
  return t == Topology::kFullyConnected ? "fc" : "nn";
}

std::vector<std::pair<int, int>> OrderedPairs(Topology t, int n) {
  std::vector<std::pair<int, int>> pairs;
  if (t == Topology::kFullyConnected) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) pairs.emplace_back(i, j);
      }
    }
    return pairs;
  }
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (i == j) continue;
    for (auto p : {std::pair{i, j}, std::pair{j, i}}) {
      if (seen.insert(p).second) pairs.push_back(p);
    }
  }
  return pairs;
}

GeneratorSet GeneratorsFromCoefficients(BasisPtr basis,
                                        const HwpCoefficients& c,
                                        Topology topology) {
  if (c.IsZero()) {
    throw std::domain_error("generator coefficients are all zero");
  }
  GeneratorSet gs;
  gs.basis = basis;
  for (auto [i, j] : OrderedPairs(topology, basis->num_qubits())) {
    gs.generators.push_back(Complex(0.0, 1.0) *
                            EmbedGenerator(*basis, c, i, j));
  }
  return gs;
}

Eigen::MatrixXcd Commutator(const Eigen::MatrixXcd& a,
                            const Eigen::MatrixXcd& b) {
  return a * b - b * a;
}

DlaResult DlaDimension(const GeneratorSet& gs, double tol) {
  DlaResult result;
  if (gs.generators.empty()) return result;
  const Index d = gs.generators.front().rows();
  const Index len = d * d;
  SpanTracker span(len, tol);

  // Generators i H are stored through their Hermitian part H.
  Eigen::VectorXd v(len);
  for (const auto& g : gs.generators) {
    const Eigen::MatrixXcd h = Complex(0.0, -1.0) * g;
    PackHermitian(h, v.data());
    const double nv = v.norm();
    if (nv < kZeroBracket) continue;
    span.TryAdmit(v, 0, nv);
    if (span.size() == len) break;
  }

  // Element a is bracketed with every element b < a. For Hermitian A, B the
  // Hermitian part of [iA, iB] is i[A, B].
  std::vector<Eigen::MatrixXcd> elems;
  elems.reserve(static_cast<size_t>(span.size()));
  for (Index a = 0; a < span.size() && span.size() < len; ++a) {
    elems.push_back(UnpackHermitian(span.column(a), d));
    if (a == 0) continue;
    const Eigen::MatrixXcd& ea = elems.back();
    Eigen::MatrixXd cand(len, a);
    std::vector<double> norms(static_cast<size_t>(a));
    for (Index b = 0; b < a; ++b) {
      const Eigen::MatrixXcd br =
          Complex(0.0, 1.0) * Commutator(ea, elems[static_cast<size_t>(b)]);
      PackHermitian(br, cand.col(b).data());
      norms[static_cast<size_t>(b)] = cand.col(b).norm();
    }
    result.iterations += a;
    const Index before = span.size();
    Eigen::MatrixXd resid = span.Residuals(cand);
    for (Index b = 0; b < a && span.size() < len; ++b) {
      if (norms[static_cast<size_t>(b)] < kZeroBracket) continue;
      span.TryAdmit(resid.col(b), before, norms[static_cast<size_t>(b)]);
    }
  }
  result.dim = span.size();
  result.closure_basis_size = span.size();
  return result;
}

CoefficientFlags CoefficientFlags::Of(const HwpCoefficients& c, double tol) {
  return {std::abs(c.r) > tol, std::abs(c.j) > tol, std::abs(c.e) > tol,
          std::abs(c.s) > tol};
}

CoefficientFlags CoefficientFlags::FromMask(unsigned mask) {
  return {(mask & 8u) != 0, (mask & 4u) != 0, (mask & 2u) != 0,
          (mask & 1u) != 0};
}

unsigned CoefficientFlags::mask() const {
  return (r ? 8u : 0u) | (j ? 4u : 0u) | (e ? 2u : 0u) | (s ? 1u : 0u);
}

HwpCoefficients CoefficientFlags::Unit() const {
  return {r ? 1.0 : 0.0, j ? 1.0 : 0.0, e ? 1.0 : 0.0, s ? 1.0 : 0.0};
}

std::string CoefficientFlags::Label() const {
  std::string out;
  auto add = [&out](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += '+';
    out += name;
  };
  add(r, "r");
  add(j, "j");
  add(e, "e");
  add(s, "s");
  return out.empty() ? "none" : out;
}

std::vector<CoefficientFlags> AllConfigurations() {
  std::vector<CoefficientFlags> out;
  for (unsigned m = 1; m < 16; ++m) out.push_back(CoefficientFlags::FromMask(m));
  return out;
}

int DlaType(const CoefficientFlags& f) {
  if (!f.any()) throw std::domain_error("all-zero configuration");
  if ((f.e && f.j) || (f.e && f.r && f.s)) return 1;
  const int rjs = int(f.r) + int(f.j) + int(f.s);
  if (!f.e && rjs >= 2) return 8;
  if (f.e && f.r) return 7;   // r, e
  if (f.e && f.s) return 6;   // e, s
  if (f.e) return 4;
  if (f.r) return 2;
  if (f.j) return 3;
  return 5;  // s only
}

std::int64_t PredictedDimension(const CoefficientFlags& flags, int n, int k,
                                Topology topology) {
  if (n < 3 || k < 1 || k > n - 1) {
    throw std::domain_error("predicted dimension needs n >= 3, 1 <= k < n");
  }
  const std::int64_t d = Dimension(n, k);
  const std::int64_t d2 = d * d;
  const int kk = std::min(k, n - k);
  const bool half = 2 * kk == n;
  const std::int64_t nn = n;
  const int type = DlaType(flags);

  if (topology == Topology::kNearestNeighborRing) {
    if (type != 1) {
      throw UnsupportedCase("nearest-neighbour dimension of configuration " +
                            flags.Label() + " is not established");
    }
    const bool je_only = flags.j && flags.e && !flags.r && !flags.s;
    if (je_only) return half ? d2 / 2 - 1 : d2;
    return d2;
  }

  switch (type) {
    case 1: return d2;
    case 2: return half ? d2 / 2 - 2 : d2 - 1;
    case 3: return d * (d - 1) / 2;
    case 4:
      if (kk == 1) return nn;
      return half ? (nn - 1) * (nn - 2) / 2 : nn * (nn - 1) / 2;
    case 5: return nn - 1;
    case 6: return kk == 1 ? nn : nn * (nn - 1) / 2;
    case 7: return half ? d2 / 2 - 1 : d2;
    case 8: return d2 - 1;
  }
  throw std::logic_error("unreachable DLA type");
}

bool IsUniversal(const HwpCoefficients& c, Topology topology) {
  const bool r = Nz(c.r), j = Nz(c.j), e = Nz(c.e), s = Nz(c.s);
  if (topology == Topology::kFullyConnected) {
    return (e && j) || (e && r && s);
  }
  return (e && j && r) || (e && j && s) || (e && r && s);
}

}  // namespace hwp
