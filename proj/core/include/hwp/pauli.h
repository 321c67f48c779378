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

// Qubit Hamiltonians as sums of Pauli words, plus the line-oriented text
// format used to ingest them:
//
//     # qubits: 4
//     -0.5 X0 Z1 X2
//     0.25 0.0 Z0 Z3
//     1.0 I
//
// Each line is `<real> [<imag>] <word>`; `#` starts a comment.

#ifndef HWP_PAULI_H_
#define HWP_PAULI_H_

#include <compare>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hwp/subspace.h"

namespace hwp {

// P = i^{#Y} X^x Z^z, so Y on a qubit has both bits set.
struct PauliWord {
  Bitstring x = 0;
  Bitstring z = 0;

  static PauliWord Identity() { return {}; }
  static PauliWord Single(char op, int qubit);
  // "X0 Z1 Y3", "I" or "" for the identity. Throws std::invalid_argument.
  static PauliWord Parse(std::string_view text);

  int num_y() const { return Popcount(x & z); }
  // Highest qubit touched, or -1 for the identity.
  int MaxQubit() const;
  std::string ToString() const;

  // Action on a basis state: P|b> = Phase(b) |b ^ x>.
  Complex Phase(Bitstring b) const;

  friend auto operator<=>(const PauliWord&, const PauliWord&) = default;
};

PauliWord operator*(const PauliWord& a, const PauliWord& b);  // up to phase

struct PauliTerm {
  Complex coefficient;
  PauliWord word;
};

class PauliHamiltonian {
 public:
  explicit PauliHamiltonian(int num_qubits = 0) : n_(num_qubits) {}

  int num_qubits() const { return n_; }
  // Grows the register if `word` touches a higher qubit.
  void Add(Complex coefficient, const PauliWord& word);
  void Add(const PauliHamiltonian& other, Complex scale = 1.0);

  // Terms in word order with identical words merged.
  std::vector<PauliTerm> Terms() const;
  std::size_t size() const { return terms_.size(); }
  // Drops terms with |coefficient| <= tol.
  void Prune(double tol = 1e-14);

  // Every merged coefficient has |Im| <= tol.
  bool IsHermitian(double tol = 1e-12) const;
  // Commutes with the total number operator sum_q (I - Z_q) / 2.
  bool ConservesNumber(double tol = 1e-12) const;

  // Dense 2^n matrix; for small test registers only.
  std::vector<Complex> DenseFullSpace() const;

 private:
  int n_;
  std::map<PauliWord, Complex> terms_;
};

class PauliParseError : public std::runtime_error {
 public:
  PauliParseError(const std::string& source, int line, const std::string& msg);
  int line() const { return line_; }

 private:
  int line_;
};

// Throws PauliParseError on malformed input and std::invalid_argument when
// the merged sum is not Hermitian.
PauliHamiltonian ParsePauliText(std::istream& in,
                                const std::string& source = "<input>");
PauliHamiltonian ParsePauliFile(const std::string& path);

void WritePauliText(const PauliHamiltonian& h, std::ostream& out);
void WritePauliFile(const PauliHamiltonian& h, const std::string& path);

}  // namespace hwp

#endif  // HWP_PAULI_H_
