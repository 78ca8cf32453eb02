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

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foqcs {

enum class GateKind : std::uint8_t {
  X,
  H,
  S,
  Sdg,
  Ry,
  Rz,
  Phase,
  CNOT,
  CZ,
  CRy,
  CRz,
  CPhase,
  Toffoli,
  Gamma,
  CGamma,
};

std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);
int gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);
bool is_primitive(GateKind kind);

// Operand order: controls first, then target(s).
//   CNOT, CZ, CRy, CRz, CPhase : {control, target}
//   Toffoli                    : {c0, c1, target}
//   Gamma                      : {lo, hi}; CRy(lo -> hi) then CNOT(hi -> lo)
//   CGamma                     : {control, lo, hi}
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> qubits;
  double angle = 0.0;

  bool operator==(const Gate&) const = default;
};

struct Register {
  std::string name;
  int start = 0;
  int size = 0;

  bool operator==(const Register&) const = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int width);

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<Register>& layout() const { return layout_; }
  bool empty() const { return gates_.empty(); }
  std::size_t size() const { return gates_.size(); }

  void add_register(std::string name, int start, int size);
  const Register& reg(std::string_view name) const;
  bool has_register(std::string_view name) const;

  Circuit& add(Gate g);
  Circuit& add(GateKind kind, std::initializer_list<int> qubits,
               double angle = 0.0);

  Circuit& x(int q) { return add(GateKind::X, {q}); }
  Circuit& h(int q) { return add(GateKind::H, {q}); }
  Circuit& s(int q) { return add(GateKind::S, {q}); }
  Circuit& sdg(int q) { return add(GateKind::Sdg, {q}); }
  Circuit& ry(int q, double t) { return add(GateKind::Ry, {q}, t); }
  Circuit& rz(int q, double t) { return add(GateKind::Rz, {q}, t); }
  Circuit& phase(int q, double t) { return add(GateKind::Phase, {q}, t); }
  Circuit& cnot(int c, int t) { return add(GateKind::CNOT, {c, t}); }
  Circuit& cz(int c, int t) { return add(GateKind::CZ, {c, t}); }
  Circuit& toffoli(int c0, int c1, int t) {
    return add(GateKind::Toffoli, {c0, c1, t});
  }
  Circuit& gamma(int lo, int hi, double t) {
    return add(GateKind::Gamma, {lo, hi}, t);
  }

  /// Appends b (same width).
  Circuit& append(const Circuit& b);
  /// Appends b with qubit q of b placed on map[q].
  Circuit& append(const Circuit& b, std::span<const int> map);

  /// Reverse order, each gate inverted. Gamma and CGamma are expanded one
  /// level first; Toffolis are kept.
  Circuit inverse() const;

 private:
  int width_ = 0;
  std::vector<Gate> gates_;
  std::vector<Register> layout_;
};

Circuit compose(const Circuit& a, const Circuit& b);
Circuit compose(const Circuit& a, const Circuit& b, std::span<const int> map);

/// Adds control ctrl. Throws DomainError for kinds without a controlled form.
Gate control(const Gate& g, int ctrl);
Circuit control(const Circuit& c, int ctrl);

/// One expansion step of a composite gate (identity for primitives).
std::vector<Gate> expand(const Gate& g);
Gate inverse(const Gate& g);

/// Rewrites until only X, H, S, Sdg, Ry, Rz, Phase, CNOT, CZ remain.
Circuit lower(const Circuit& c);

struct CountReport {
  long cnot_equivalent = 0;
  long toffoli = 0;
  long crz = 0;
  long cphase = 0;
  long single_qubit = 0;
  // Pre-lowering breakdown.
  long cnot = 0;
  long cz = 0;
  long cry = 0;
  long gamma = 0;
  long cgamma = 0;

  bool operator==(const CountReport&) const = default;
};

/// Two-qubit gates of lower(g) per gate kind (CZ counts as one).
long cnot_cost(GateKind kind);

CountReport count(const Circuit& c);

/// OpenQASM 2.0 of a lowered circuit; one qreg per layout register.
std::string export_qasm(const Circuit& c);
Circuit parse_qasm(std::string_view text);

}  // namespace foqcs
