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

#include "foqcs/circuit.hpp"

namespace foqcs {

// The system register ("system" in the layout) occupies the highest qubits;
// every other qubit is an ancilla post-selected on |0>.
struct BlockEncoding {
  Circuit circuit;
  double normalization = 1.0;

  const Register& system() const { return circuit.reg("system"); }
  int ancilla_width() const { return system().start; }
};

}  // namespace foqcs
