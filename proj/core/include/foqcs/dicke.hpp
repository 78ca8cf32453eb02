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
#include <optional>
#include <span>
#include <vector>

#include "foqcs/circuit.hpp"

namespace foqcs {

using Complex = std::complex<double>;

inline constexpr double kAngleTol = 1e-14;

class AmplitudeList {
 public:
  /// Normalizes on construction; throws DomainError on an all-zero list.
  explicit AmplitudeList(std::vector<Complex> alphas);
  static AmplitudeList uniform(int n);

  int size() const { return static_cast<int>(alphas_.size()); }
  Complex operator[](int l) const { return alphas_[l]; }
  const std::vector<Complex>& values() const { return alphas_; }
  AmplitudeList conj() const;

 private:
  std::vector<Complex> alphas_;
};

struct DickeAngles {
  std::vector<double> thetas;  // thetas[l - 1] holds theta_l, l = 1..n-1
  std::vector<double> etas;    // etas[l] = arg(alpha_l)
};

std::vector<double> balanced_angles(int n);
DickeAngles unbalanced_angles(const AmplitudeList& a);

/// Delta_n: Gamma(theta_l) on qubits (n-1-l, n-l), applied for
/// l = n-1 down to 1 (bottom pair first).
Circuit staircase(int n, std::span<const double> thetas);

/// count CNOTs; rung i has control first + i and target control - offset.
Circuit cnot_chain(int width, int offset, int count, int first);
/// The standard CL_k on n qubits: control q + k, target q, q = 0..n-k-1.
Circuit cnot_ladder(int n, int k);

Circuit elementwise_copy(int width, std::span<const int> src,
                         std::span<const int> dst);
/// Copies qubits [0, n) onto [n, 2n).
Circuit elementwise_copy(int n);

Circuit prepare_dicke1(int n);
Circuit prepare_dicke1(const AmplitudeList& a);

Circuit prepare_dicke2k(int n, int k,
                        const std::optional<AmplitudeList>& a = std::nullopt);

enum class DoubleKind { Single, Pair };

/// Width 2n: base preparer on [0, n) followed by EC onto [n, 2n).
Circuit prepare_double(int n, DoubleKind kind, int k = 0,
                       const std::optional<AmplitudeList>& a = std::nullopt);

/// Appends the phase gates P(eta_l) on qubits[l] for |eta_l| > 1e-14.
void append_phases(Circuit& c, std::span<const double> etas,
                   std::span<const int> qubits);

}  // namespace foqcs
