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

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "foqcs/block_encoding.hpp"
#include "foqcs/circuit.hpp"
#include "foqcs/dicke.hpp"
#include "foqcs/pauli.hpp"

namespace foqcs {

enum Axis : int { kAxisX = 0, kAxisY = 1, kAxisZ = 2 };

struct HeisenbergParams {
  int n = 2;
  double gx = 0, gy = 0, gz = 0;
  double jx = 0, jy = 0, jz = 0;

  void validate() const;
  double normalization() const;
};

struct SpinGlassParams {
  int n = 2;
  // g[axis][l]
  std::array<std::vector<double>, 3> g;
  // J[axis][l][m], only l < m is read.
  std::array<std::vector<std::vector<double>>, 3> J;

  static SpinGlassParams zeros(int n);
  void validate() const;
  double normalization() const;
};

PauliSum heisenberg_hamiltonian(const HeisenbergParams& p);
PauliSum spin_glass_hamiltonian(const SpinGlassParams& p);

struct CoefficientMatrix {
  Eigen::MatrixXcd entries;         // upper-triangular
  std::vector<double> diag_norms;   // N_k = sum of |coefficients| on diagonal k

  /// Diagonal k normalized by sqrt(N_k).
  std::vector<Complex> normalized_diagonal(int k) const;
};

CoefficientMatrix coefficient_matrix(const SpinGlassParams& p, Axis axis);

/// CNOT x_anc[l] -> system[l] then CZ z_anc[l] -- system[l].
void append_select(Circuit& c, const Register& x_anc, const Register& z_anc,
                   const Register& system);
/// Width 3n with layout x_anc, z_anc, system.
Circuit select_oracle(int n);

inline constexpr int kMaxGenericQubits = 6;

BlockEncoding generic_foqcs(const PauliSum& h);

/// Layout subpr[0,6), x_anc[6,6+n), z_anc[6+n,6+2n). With conjugate set,
/// prepares the complex-conjugate state (PL).
Circuit heisenberg_pr(const HeisenbergParams& p, bool compact = true,
                      bool conjugate = false);
BlockEncoding heisenberg_encoding(const HeisenbergParams& p);

/// Layout subpr[0,m), x_anc, z_anc where m counts diagonals with N > 1e-14.
Circuit spin_glass_pr(const SpinGlassParams& p, bool compressed = true,
                      bool conjugate = false);
BlockEncoding spin_glass_encoding(const SpinGlassParams& p);

enum class TwoBodyKind { XY, YX, XZ, ZX, YZ, ZY };

/// Width 2n, x register [0, n), z register [n, 2n).
Circuit twobody_subroutine(TwoBodyKind kind, int n, int k,
                           const std::optional<AmplitudeList>& a = std::nullopt);

}  // namespace foqcs
