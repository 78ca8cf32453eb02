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
#include <span>
#include <vector>

#include "foqcs/block_encoding.hpp"
#include "foqcs/circuit.hpp"
#include "foqcs/pauli.hpp"

namespace foqcs {

/// Uniformly controlled Ry/Rz tree preparing sum amps[m] |m> on
/// ceil(log2 size) qubits. Size must be a power of two.
Circuit generic_state_prep(std::span<const std::complex<double>> amps);

struct BaselineEncoding {
  BlockEncoding encoding;
  int index_ancillas = 0;  // ceil(log2 M)
  int work_ancillas = 0;

  int anc_count() const { return index_ancillas + work_ancillas; }
};

/// Layout index[0,c), work[c, 2c-1), system.
BaselineEncoding standard_lcu(const PauliSum& h);

}  // namespace foqcs
