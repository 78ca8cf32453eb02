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

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace foqcs {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// (x_bit, z_bit) of the check-matrix form, with Y = (1, 1).
std::pair<int, int> pauli_to_checkpair(Pauli p);

/// A weighted Pauli string. ops[l] acts on site l (binary weight 2^l).
struct PauliTerm {
  Complex coefficient;
  std::vector<Pauli> ops;

  /// Parses "XYZ"-style text where the rightmost character is site 0.
  static PauliTerm parse(Complex coefficient, std::string_view text);
  std::string label() const;
};

class PauliSum {
 public:
  PauliSum() = default;
  /// Merges duplicate strings and drops terms with |coefficient| < 1e-15.
  PauliSum(int n, std::vector<PauliTerm> terms);

  int num_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<PauliTerm>& terms() const { return terms_; }

 private:
  int n_ = 0;
  std::vector<PauliTerm> terms_;
};

struct CheckTerm {
  std::uint64_t i = 0;  // X pattern
  std::uint64_t j = 0;  // Z pattern
  Complex alpha_prime;
};

std::vector<CheckTerm> check_decompose(const PauliSum& h);

/// Matrix of Z^j X^i (site l carries Z^{j_l} X^{i_l}).
Eigen::MatrixXcd check_string_matrix(int n, std::uint64_t i, std::uint64_t j);

inline constexpr int kMaxMatrixQubits = 12;

Eigen::MatrixXcd hamiltonian_matrix(const PauliSum& h);

double one_norm(const PauliSum& h);

/// Sum over eigenpairs of |lambda/N|^2 |<lambda|phi>|^2.
double success_probability(const PauliSum& h, const Eigen::VectorXcd& phi);

}  // namespace foqcs
