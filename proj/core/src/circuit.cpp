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

#include "foqcs/circuit.hpp"

#include <algorithm>
#include <array>
#include <numbers>
#include <string>

#include "foqcs/errors.hpp"

namespace foqcs {

namespace {

constexpr double kPi = std::numbers::pi;

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  bool angle;
};

constexpr std::array<KindInfo, 15> kKinds{{
    {GateKind::X, "x", 1, false},
    {GateKind::H, "h", 1, false},
    {GateKind::S, "s", 1, false},
    {GateKind::Sdg, "sdg", 1, false},
    {GateKind::Ry, "ry", 1, true},
    {GateKind::Rz, "rz", 1, true},
    {GateKind::Phase, "phase", 1, true},
    {GateKind::CNOT, "cnot", 2, false},
    {GateKind::CZ, "cz", 2, false},
    {GateKind::CRy, "cry", 2, true},
    {GateKind::CRz, "crz", 2, true},
    {GateKind::CPhase, "cphase", 2, true},
    {GateKind::Toffoli, "toffoli", 3, false},
    {GateKind::Gamma, "gamma", 2, true},
    {GateKind::CGamma, "cgamma", 3, true},
}};

const KindInfo& info(GateKind k) { return kKinds[static_cast<int>(k)]; }

Gate g1(GateKind k, int q, double a = 0.0) { return Gate{k, {q}, a}; }
Gate g2(GateKind k, int c, int t, double a = 0.0) { return Gate{k, {c, t}, a}; }

void check_operands(const Gate& g, int width) {
  if (static_cast<int>(g.qubits.size()) != gate_arity(g.kind))
    throw DomainError(std::string(gate_name(g.kind)) + " expects " +
                      std::to_string(gate_arity(g.kind)) + " operands");
  for (std::size_t a = 0; a < g.qubits.size(); ++a) {
    if (g.qubits[a] < 0 || g.qubits[a] >= width)
      throw DomainError("qubit " + std::to_string(g.qubits[a]) +
                        " out of range for width " + std::to_string(width));
    for (std::size_t b = a + 1; b < g.qubits.size(); ++b)
      if (g.qubits[a] == g.qubits[b])
        throw DomainError("repeated operand in " +
                          std::string(gate_name(g.kind)));
  }
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

GateKind gate_kind_from_name(std::string_view name) {
  for (const auto& k : kKinds)
    if (k.name == name) return k.kind;
  throw ParseError("unknown gate kind '" + std::string(name) + "'");
}

int gate_arity(GateKind kind) { return info(kind).arity; }
bool gate_has_angle(GateKind kind) { return info(kind).angle; }

bool is_primitive(GateKind kind) {
  return static_cast<int>(kind) <= static_cast<int>(GateKind::CZ);
}

Circuit::Circuit(int width) : width_(width) {
  if (width < 0) throw DomainError("negative circuit width");
}

void Circuit::add_register(std::string name, int start, int size) {
  if (size <= 0 || start < 0 || start + size > width_)
    throw DomainError("register '" + name + "' out of range");
  for (const auto& r : layout_) {
    if (r.name == name) throw DomainError("duplicate register '" + name + "'");
    if (start < r.start + r.size && r.start < start + size)
      throw DomainError("register '" + name + "' overlaps '" + r.name + "'");
  }
  layout_.push_back(Register{std::move(name), start, size});
}

const Register& Circuit::reg(std::string_view name) const {
  for (const auto& r : layout_)
    if (r.name == name) return r;
  throw DomainError("layout has no register '" + std::string(name) + "'");
}

bool Circuit::has_register(std::string_view name) const {
  return std::any_of(layout_.begin(), layout_.end(),
                     [&](const Register& r) { return r.name == name; });
}

Circuit& Circuit::add(Gate g) {
  check_operands(g, width_);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::add(GateKind kind, std::initializer_list<int> qubits,
                      double angle) {
  return add(Gate{kind, std::vector<int>(qubits), angle});
}

Circuit& Circuit::append(const Circuit& b) {
  if (b.width_ != width_)
    throw DomainError("width mismatch: " + std::to_string(width_) + " vs " +
                      std::to_string(b.width_));
  gates_.insert(gates_.end(), b.gates_.begin(), b.gates_.end());
  return *this;
}

Circuit& Circuit::append(const Circuit& b, std::span<const int> map) {
  if (static_cast<int>(map.size()) != b.width_)
    throw DomainError("qubit map size does not match circuit width");
  std::vector<bool> used(width_, false);
  for (int q : map) {
    if (q < 0 || q >= width_) throw DomainError("qubit map out of range");
    if (used[q]) throw DomainError("qubit map collision on " + std::to_string(q));
    used[q] = true;
  }
  gates_.reserve(gates_.size() + b.gates_.size());
  for (Gate g : b.gates_) {
    for (int& q : g.qubits) q = map[q];
    gates_.push_back(std::move(g));
  }
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(width_);
  out.layout_ = layout_;
  std::vector<Gate> flat;
  flat.reserve(gates_.size());
  for (const auto& g : gates_) {
    if (g.kind == GateKind::Gamma || g.kind == GateKind::CGamma) {
      auto e = expand(g);
      flat.insert(flat.end(), e.begin(), e.end());
    } else {
      flat.push_back(g);
    }
  }
  out.gates_.reserve(flat.size());
  for (auto it = flat.rbegin(); it != flat.rend(); ++it)
    out.gates_.push_back(foqcs::inverse(*it));
  return out;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.append(b);
  return out;
}

Circuit compose(const Circuit& a, const Circuit& b, std::span<const int> map) {
  Circuit out = a;
  out.append(b, map);
  return out;
}

Gate control(const Gate& g, int ctrl) {
  if (std::find(g.qubits.begin(), g.qubits.end(), ctrl) != g.qubits.end())
    throw DomainError("control qubit is already an operand");
  const auto& q = g.qubits;
  switch (g.kind) {
    case GateKind::X: return Gate{GateKind::CNOT, {ctrl, q[0]}, 0.0};
    case GateKind::Ry: return Gate{GateKind::CRy, {ctrl, q[0]}, g.angle};
    case GateKind::Rz: return Gate{GateKind::CRz, {ctrl, q[0]}, g.angle};
    case GateKind::Phase: return Gate{GateKind::CPhase, {ctrl, q[0]}, g.angle};
    case GateKind::CNOT: return Gate{GateKind::Toffoli, {ctrl, q[0], q[1]}, 0.0};
    case GateKind::Gamma:
      return Gate{GateKind::CGamma, {ctrl, q[0], q[1]}, g.angle};
    default:
      throw DomainError("no controlled form for " +
                        std::string(gate_name(g.kind)));
  }
}

Circuit control(const Circuit& c, int ctrl) {
  Circuit out(c.width());
  for (const auto& r : c.layout()) out.add_register(r.name, r.start, r.size);
  for (const auto& g : c.gates()) out.add(control(g, ctrl));
  return out;
}

std::vector<Gate> expand(const Gate& g) {
  const auto& q = g.qubits;
  const double t = g.angle;
  switch (g.kind) {
    case GateKind::CRy:
      return {g1(GateKind::Ry, q[1], t / 2), g2(GateKind::CNOT, q[0], q[1]),
              g1(GateKind::Ry, q[1], -t / 2), g2(GateKind::CNOT, q[0], q[1])};
    case GateKind::CRz:
      return {g1(GateKind::Rz, q[1], t / 2), g2(GateKind::CNOT, q[0], q[1]),
              g1(GateKind::Rz, q[1], -t / 2), g2(GateKind::CNOT, q[0], q[1])};
    case GateKind::CPhase:
      return {g1(GateKind::Phase, q[1], t / 2), g2(GateKind::CNOT, q[0], q[1]),
              g1(GateKind::Phase, q[1], -t / 2),
              g2(GateKind::CNOT, q[0], q[1]), g1(GateKind::Phase, q[0], t / 2)};
    case GateKind::Toffoli: {
      const int a = q[0], b = q[1], c = q[2];
      return {g1(GateKind::H, c),
              g2(GateKind::CNOT, b, c),
              g1(GateKind::Phase, c, -kPi / 4),
              g2(GateKind::CNOT, a, c),
              g1(GateKind::Phase, c, kPi / 4),
              g2(GateKind::CNOT, b, c),
              g1(GateKind::Phase, c, -kPi / 4),
              g2(GateKind::CNOT, a, c),
              g1(GateKind::Phase, b, kPi / 4),
              g1(GateKind::Phase, c, kPi / 4),
              g1(GateKind::H, c),
              g2(GateKind::CNOT, a, b),
              g1(GateKind::Phase, a, kPi / 4),
              g1(GateKind::Phase, b, -kPi / 4),
              g2(GateKind::CNOT, a, b)};
    }
    case GateKind::Gamma: {
      const int lo = q[0], hi = q[1];
      return {g1(GateKind::S, hi),
              g1(GateKind::H, hi),
              g1(GateKind::Rz, hi, kPi / 2 - t / 2),
              g2(GateKind::CNOT, hi, lo),
              g1(GateKind::Rz, lo, t / 2 - kPi / 2),
              g1(GateKind::H, hi),
              g1(GateKind::H, lo),
              g1(GateKind::Sdg, lo),
              g2(GateKind::CNOT, hi, lo),
              g1(GateKind::S, hi),
              g1(GateKind::H, hi)};
    }
    case GateKind::CGamma: {
      const int c = q[0], lo = q[1], hi = q[2];
      return {g2(GateKind::CRy, lo, hi, t / 2),
              g2(GateKind::CNOT, c, lo),
              g2(GateKind::CRy, lo, hi, -t / 2),
              g2(GateKind::CNOT, c, lo),
              g2(GateKind::CRy, c, hi, t / 2),
              Gate{GateKind::Toffoli, {c, hi, lo}, 0.0}};
    }
    default:
      return {g};
  }
}

Gate inverse(const Gate& g) {
  Gate out = g;
  switch (g.kind) {
    case GateKind::S: out.kind = GateKind::Sdg; break;
    case GateKind::Sdg: out.kind = GateKind::S; break;
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::Phase:
    case GateKind::CRy:
    case GateKind::CRz:
    case GateKind::CPhase:
      out.angle = -g.angle;
      break;
    case GateKind::Gamma:
    case GateKind::CGamma:
      throw DomainError("expand gamma gates before inverting them");
    default:
      break;
  }
  return out;
}

namespace {

void lower_into(const Gate& g, std::vector<Gate>& out) {
  if (is_primitive(g.kind)) {
    out.push_back(g);
    return;
  }
  for (const auto& e : expand(g)) lower_into(e, out);
}

struct Cost {
  long two_qubit = 0;
  long single_qubit = 0;
};

const std::array<Cost, 15>& cost_table() {
  static const std::array<Cost, 15> table = [] {
    std::array<Cost, 15> t{};
    for (const auto& k : kKinds) {
      Gate g{k.kind, {}, 0.3};
      for (int i = 0; i < k.arity; ++i) g.qubits.push_back(i);
      std::vector<Gate> low;
      lower_into(g, low);
      for (const auto& e : low) {
        if (gate_arity(e.kind) == 1)
          ++t[static_cast<int>(k.kind)].single_qubit;
        else
          ++t[static_cast<int>(k.kind)].two_qubit;
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

Circuit lower(const Circuit& c) {
  Circuit out(c.width());
  for (const auto& r : c.layout()) out.add_register(r.name, r.start, r.size);
  std::vector<Gate> low;
  low.reserve(c.size() * 4);
  for (const auto& g : c.gates()) lower_into(g, low);
  for (auto& g : low) out.add(std::move(g));
  return out;
}

long cnot_cost(GateKind kind) {
  return cost_table()[static_cast<int>(kind)].two_qubit;
}

CountReport count(const Circuit& c) {
  CountReport r;
  const auto& table = cost_table();
  for (const auto& g : c.gates()) {
    const auto& cost = table[static_cast<int>(g.kind)];
    r.cnot_equivalent += cost.two_qubit;
    r.single_qubit += cost.single_qubit;
    switch (g.kind) {
      case GateKind::CNOT: ++r.cnot; break;
      case GateKind::CZ: ++r.cz; break;
      case GateKind::CRy: ++r.cry; break;
      case GateKind::CRz: ++r.crz; break;
      case GateKind::CPhase: ++r.cphase; break;
      case GateKind::Toffoli: ++r.toffoli; break;
      case GateKind::Gamma: ++r.gamma; break;
      case GateKind::CGamma: ++r.cgamma; break;
      default: break;
    }
  }
  return r;
}

}  // namespace foqcs
