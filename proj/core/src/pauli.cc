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

#include "hwp/pauli.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>

namespace hwp {

namespace {

constexpr Complex kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ParseDouble(std::string_view tok, double* out) {
  // std::from_chars for double is available in libstdc++ 11.
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, *out);
  return ec == std::errc() && ptr == end;
}

bool LooksNumeric(std::string_view tok) {
  double unused;
  return ParseDouble(tok, &unused);
}

}  // namespace

PauliWord PauliWord::Single(char op, int qubit) {
  if (qubit < 0 || qubit >= kMaxQubits) {
    throw std::invalid_argument("Pauli qubit index out of range");
  }
  const Bitstring m = Bitstring{1} << qubit;
  switch (op) {
    case 'X': return {m, 0};
    case 'Y': return {m, m};
    case 'Z': return {0, m};
    case 'I': return {};
  }
  throw std::invalid_argument(std::string("unknown Pauli operator '") + op +
                              "'");
}

PauliWord PauliWord::Parse(std::string_view text) {
  PauliWord w;
  for (std::string_view tok : SplitWhitespace(text)) {
    if (tok == "I") continue;
    const char op = tok[0];
    if (op != 'X' && op != 'Y' && op != 'Z') {
      throw std::invalid_argument("bad Pauli factor '" + std::string(tok) +
                                  "'");
    }
    int q = -1;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data() + 1, end, q);
    if (tok.size() < 2 || ec != std::errc() || ptr != end) {
      throw std::invalid_argument("bad Pauli factor '" + std::string(tok) +
                                  "'");
    }
    const PauliWord f = Single(op, q);
    if ((w.x | w.z) & (f.x | f.z)) {
      throw std::invalid_argument("qubit " + std::to_string(q) +
                                  " appears twice in Pauli word");
    }
    w.x |= f.x;
    w.z |= f.z;
  }
  return w;
}

int PauliWord::MaxQubit() const {
  const Bitstring all = x | z;
  return all == 0 ? -1 : 31 - __builtin_clz(all);
}

std::string PauliWord::ToString() const {
  if ((x | z) == 0) return "I";
  std::string out;
  for (int q = 0; q <= MaxQubit(); ++q) {
    const bool bx = (x >> q) & 1u, bz = (z >> q) & 1u;
    if (!bx && !bz) continue;
    if (!out.empty()) out += ' ';
    out += bx ? (bz ? 'Y' : 'X') : 'Z';
    out += std::to_string(q);
  }
  return out;
}

Complex PauliWord::Phase(Bitstring b) const {
  const int sign = Popcount(b & z) & 1;
  const Complex p = kPowI[num_y() & 3];
  return sign ? -p : p;
}

PauliWord operator*(const PauliWord& a, const PauliWord& b) {
  return {a.x ^ b.x, a.z ^ b.z};
}

void PauliHamiltonian::Add(Complex coefficient, const PauliWord& word) {
  n_ = std::max(n_, word.MaxQubit() + 1);
  terms_[word] += coefficient;
}

void PauliHamiltonian::Add(const PauliHamiltonian& other, Complex scale) {
  n_ = std::max(n_, other.n_);
  for (const auto& [w, c] : other.terms_) terms_[w] += scale * c;
}

std::vector<PauliTerm> PauliHamiltonian::Terms() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.push_back({c, w});
  return out;
}

void PauliHamiltonian::Prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) {
    return std::abs(kv.second) <= tol;
  });
}

bool PauliHamiltonian::IsHermitian(double tol) const {
  for (const auto& [w, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

bool PauliHamiltonian::ConservesNumber(double tol) const {
  // Matrix elements <b ^ F| H |b> come only from words with x = F. Splitting
  // b into its restriction p to F and the rest q, the words sharing
  // (F, z outside F) contribute a common character of q, so each such group
  // must vanish on every p whose popcount differs from |F| / 2.
  std::map<std::pair<Bitstring, Bitstring>, std::vector<PauliTerm>> groups;
  for (const auto& [w, c] : terms_) {
    if (w.x == 0) continue;
    groups[{w.x, w.z & ~w.x}].push_back({c, w});
  }
  for (const auto& [key, terms] : groups) {
    const Bitstring flip = key.first;
    const int nf = Popcount(flip);
    if (nf > 20) {
      throw std::invalid_argument("Pauli word flips too many qubits to check");
    }
    // Enumerate subsets p of `flip`.
    Bitstring p = 0;
    do {
      if (2 * Popcount(p) != nf) {
        Complex sum = 0.0;
        for (const auto& t : terms) sum += t.coefficient * t.word.Phase(p);
        if (std::abs(sum) > tol) return false;
      }
      p = (p - flip) & flip;
    } while (p != 0);
  }
  return true;
}

std::vector<Complex> PauliHamiltonian::DenseFullSpace() const {
  if (n_ > 14) throw std::domain_error("full-space matrix too large");
  const std::size_t dim = std::size_t{1} << n_;
  std::vector<Complex> m(dim * dim, 0.0);
  for (const auto& [w, c] : terms_) {
    for (Bitstring b = 0; b < dim; ++b) {
      m[(b ^ w.x) + dim * b] += c * w.Phase(b);
    }
  }
  return m;
}

PauliParseError::PauliParseError(const std::string& source, int line,
                                 const std::string& msg)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg),
      line_(line) {}

PauliHamiltonian ParsePauliText(std::istream& in, const std::string& source) {
  PauliHamiltonian h;
  std::string line;
  int lineno = 0;
  int declared = -1;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) {
      std::string_view comment(line);
      comment.remove_prefix(hash + 1);
      const auto toks = SplitWhitespace(comment);
      if (toks.size() == 2 && toks[0] == "qubits:") {
        const char* end = toks[1].data() + toks[1].size();
        auto [ptr, ec] = std::from_chars(toks[1].data(), end, declared);
        if (ec != std::errc() || ptr != end || declared < 0 ||
            declared > kMaxQubits) {
          throw PauliParseError(source, lineno, "bad qubit count header");
        }
      }
      line.resize(hash);
    }
    const auto toks = SplitWhitespace(line);
    if (toks.empty()) continue;
    double re = 0.0, im = 0.0;
    if (!ParseDouble(toks[0], &re)) {
      throw PauliParseError(source, lineno,
                            "expected a coefficient, got '" +
                                std::string(toks[0]) + "'");
    }
    size_t first_op = 1;
    if (toks.size() > 1 && LooksNumeric(toks[1])) {
      ParseDouble(toks[1], &im);
      first_op = 2;
    }
    if (first_op >= toks.size()) {
      throw PauliParseError(source, lineno, "missing Pauli word");
    }
    std::string word_text;
    for (size_t i = first_op; i < toks.size(); ++i) {
      if (!word_text.empty()) word_text += ' ';
      word_text += toks[i];
    }
    try {
      h.Add(Complex(re, im), PauliWord::Parse(word_text));
    } catch (const std::invalid_argument& e) {
      throw PauliParseError(source, lineno, e.what());
    }
  }
  if (declared >= 0) {
    if (declared < h.num_qubits()) {
      throw PauliParseError(source, lineno,
                            "terms exceed the declared qubit count");
    }
    PauliHamiltonian sized(declared);
    sized.Add(h);
    h = std::move(sized);
  }
  if (!h.IsHermitian()) {
    throw std::invalid_argument(source +
                                ": Hamiltonian is not Hermitian after merging");
  }
  return h;
}

PauliHamiltonian ParsePauliFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ParsePauliText(in, path);
}

void WritePauliText(const PauliHamiltonian& h, std::ostream& out) {
  out << "# qubits: " << h.num_qubits() << "\n";
  for (const PauliTerm& t : h.Terms()) {
    out << std::setprecision(17) << t.coefficient.real();
    if (t.coefficient.imag() != 0.0) out << ' ' << t.coefficient.imag();
    out << ' ' << t.word.ToString() << "\n";
  }
}

void WritePauliFile(const PauliHamiltonian& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  WritePauliText(h, out);
}

}  // namespace hwp
