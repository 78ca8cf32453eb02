// Copyright 2026 The FOQCS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "foqcs/pauli.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "foqcs/errors.hpp"

namespace foqcs {

namespace {

constexpr double kDropTol = 1e-15;

std::string key_of(const std::vector<Pauli>& ops) {
  std::string k(ops.size(), 'I');
  for (std::size_t l = 0; l < ops.size(); ++l) k[l] = pauli_char(ops[l]);
  return k;
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default:
      throw ParseError(std::string("invalid Pauli character '") + c + "'");
  }
}

std::pair<int, int> pauli_to_checkpair(Pauli p) {
  switch (p) {
    case Pauli::I: return {0, 0};
    case Pauli::X: return {1, 0};
    case Pauli::Y: return {1, 1};
    case Pauli::Z: return {0, 1};
  }
  return {0, 0};
}

PauliTerm PauliTerm::parse(Complex coefficient, std::string_view text) {
  if (text.empty()) throw ParseError("empty Pauli string");
  PauliTerm t;
  t.coefficient = coefficient;
  t.ops.resize(text.size());
  // Rightmost character is site 0.
  for (std::size_t l = 0; l < text.size(); ++l)
    t.ops[l] = pauli_from_char(text[text.size() - 1 - l]);
  return t;
}

std::string PauliTerm::label() const {
  std::string s(ops.size(), 'I');
  for (std::size_t l = 0; l < ops.size(); ++l)
    s[ops.size() - 1 - l] = pauli_char(ops[l]);
  return s;
}

PauliSum::PauliSum(int n, std::vector<PauliTerm> terms) : n_(n) {
  if (n < 1) throw DomainError("PauliSum needs n >= 1");
  if (n > 64) throw DomainError("PauliSum supports at most 64 sites");
  std::unordered_map<std::string, std::size_t> index;
  std::vector<PauliTerm> merged;
  for (auto& t : terms) {
    if (static_cast<int>(t.ops.size()) != n)
      throw DomainError("Pauli string length " + std::to_string(t.ops.size()) +
                        " does not match n = " + std::to_string(n));
    auto key = key_of(t.ops);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(std::move(key), merged.size());
      merged.push_back(std::move(t));
    } else {
      merged[it->second].coefficient += t.coefficient;
    }
  }
  for (auto& t : merged)
    if (std::abs(t.coefficient) >= kDropTol) terms_.push_back(std::move(t));
}

std::vector<CheckTerm> check_decompose(const PauliSum& h) {
  static const Complex kPhase[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  std::vector<CheckTerm> out;
  out.reserve(h.size());
  for (const auto& t : h.terms()) {
    CheckTerm c;
    for (std::size_t l = 0; l < t.ops.size(); ++l) {
      auto [xb, zb] = pauli_to_checkpair(t.ops[l]);
      c.i |= static_cast<std::uint64_t>(xb) << l;
      c.j |= static_cast<std::uint64_t>(zb) << l;
    }
    c.alpha_prime = kPhase[std::popcount(c.i & c.j) % 4] * t.coefficient;
    out.push_back(c);
  }
  return out;
}

Eigen::MatrixXcd check_string_matrix(int n, std::uint64_t i, std::uint64_t j) {
  if (n > kMaxMatrixQubits)
    throw ResourceError("dense matrix limited to 12 qubits");
  const std::uint64_t dim = 1ULL << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    const std::uint64_t r = b ^ i;
    m(r, b) = (std::popcount(j & r) & 1) ? -1.0 : 1.0;
  }
  return m;
}

Eigen::MatrixXcd hamiltonian_matrix(const PauliSum& h) {
  const int n = h.num_qubits();
  if (n > kMaxMatrixQubits)
    throw ResourceError("hamiltonian_matrix is limited to n <= 12");
  const std::uint64_t dim = 1ULL << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const Complex im(0, 1);
  for (const auto& t : h.terms()) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      std::uint64_t r = b;
      Complex v = t.coefficient;
      for (int l = 0; l < n; ++l) {
        const bool bit = (b >> l) & 1;
        switch (t.ops[l]) {
          case Pauli::I: break;
          case Pauli::X: r ^= 1ULL << l; break;
          case Pauli::Y:
            r ^= 1ULL << l;
            v *= bit ? -im : im;
            break;
          case Pauli::Z:
            if (bit) v = -v;
            break;
        }
      }
      m(r, b) += v;
    }
  }
  return m;
}

double one_norm(const PauliSum& h) {
  double s = 0;
  for (const auto& t : h.terms()) s += std::abs(t.coefficient);
  return s;
}

double success_probability(const PauliSum& h, const Eigen::VectorXcd& phi) {
  const Eigen::MatrixXcd m = hamiltonian_matrix(h);
  if (phi.size() != m.rows())
    throw DomainError("state dimension does not match the Hamiltonian");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError("success_probability needs a Hermitian Hamiltonian");
  const double n_norm = one_norm(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  const Eigen::VectorXcd overlaps = es.eigenvectors().adjoint() * phi;
  double p = 0;
  for (Eigen::Index k = 0; k < overlaps.size(); ++k) {
    const double lam = es.eigenvalues()(k) / n_norm;
    p += lam * lam * std::norm(overlaps(k));
  }
  return p;
}

}  // namespace foqcs
