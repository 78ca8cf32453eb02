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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "foqcs/circuit.hpp"
#include "foqcs/errors.hpp"
#include "foqcs/statevector.hpp"
#include "oracles.hpp"

namespace foqcs {
namespace {

using oracle::C;
using oracle::Mat;

constexpr double kPi = std::numbers::pi;

double diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Random circuit over every gate kind, distinct operands.
Circuit random_circuit(int w, int len, std::mt19937_64& rng, bool primitive_only = false) {
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  Circuit c(w);
  const int kinds = primitive_only ? 9 : 15;
  for (int i = 0; i < len; ++i) {
    auto kind = static_cast<GateKind>(rng() % kinds);
    const int ar = gate_arity(kind);
    if (ar > w) continue;
    std::vector<int> qs(w);
    for (int q = 0; q < w; ++q) qs[q] = q;
    std::shuffle(qs.begin(), qs.end(), rng);
    qs.resize(ar);
    c.add(Gate{kind, qs, gate_has_angle(kind) ? ang(rng) : 0.0});
  }
  return c;
}

TEST(CircuitTest, GateNamesRoundTrip) {
  for (int k = 0; k < 15; ++k) {
    const auto kind = static_cast<GateKind>(k);
    EXPECT_EQ(gate_kind_from_name(gate_name(kind)), kind);
  }
  EXPECT_THROW(gate_kind_from_name("swap"), ParseError);
}

TEST(CircuitTest, AddValidatesOperands) {
  Circuit c(3);
  EXPECT_THROW(c.add(GateKind::CNOT, {1, 1}), DomainError);
  EXPECT_THROW(c.add(GateKind::X, {3}), DomainError);
  EXPECT_THROW(c.add(GateKind::CNOT, {0}), DomainError);
  EXPECT_NO_THROW(c.add(GateKind::Toffoli, {0, 1, 2}));
}

TEST(CircuitTest, GammaTruthTable) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ang(-2 * kPi, 2 * kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const double t = ang(rng);
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    Circuit g(2);
    g.gamma(0, 1, t);
    const Circuit low = lower(g);
    // index = lo + 2 hi
    auto col = [&](std::uint64_t in) { return simulate(low, StateVector::basis(2, in)); };
    const auto c0 = col(0), c1 = col(1), c2 = col(2), c3 = col(3);
    EXPECT_NEAR(std::abs(c0[0] - 1.0), 0, 1e-14);
    EXPECT_NEAR(std::abs(c1[1] - c), 0, 1e-14);
    EXPECT_NEAR(std::abs(c1[2] - s), 0, 1e-14);
    EXPECT_NEAR(std::abs(c2[3] - 1.0), 0, 1e-14);
    EXPECT_NEAR(std::abs(c3[1] + s), 0, 1e-14);
    EXPECT_NEAR(std::abs(c3[2] - c), 0, 1e-14);
  }
}

TEST(CircuitTest, GammaLoweringUsesTwoCnots) {
  Circuit g(2);
  g.gamma(0, 1, 0.4);
  const auto low = lower(g);
  int two = 0;
  for (const auto& x : low.gates()) two += gate_arity(x.kind) == 2;
  EXPECT_EQ(two, 2);
  EXPECT_LT(diff(oracle::unitary(low), oracle::unitary(g)), 1e-14);
}

TEST(CircuitTest, EveryKindLowersExactly) {
  for (int k = 0; k < 15; ++k) {
    const auto kind = static_cast<GateKind>(k);
    const int ar = gate_arity(kind);
    std::vector<int> qs;
    static const int kPerm[] = {2, 0, 3};
    for (int i = 0; i < ar; ++i) qs.push_back(kPerm[i]);
    Circuit c(4);
    c.add(Gate{kind, qs, 0.917});
    const auto low = lower(c);
    for (const auto& g : low.gates()) EXPECT_TRUE(is_primitive(g.kind));
    EXPECT_LT(diff(oracle::unitary(low), oracle::unitary(c)), 1e-13) << gate_name(kind);
  }
}

TEST(CircuitTest, LowerMatchesUnitaryOnRandomCircuits) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const int w = 3 + static_cast<int>(rng() % 4);
    const Circuit c = random_circuit(w, 25, rng);
    EXPECT_LT(diff(oracle::unitary(lower(c)), oracle::unitary(c)), 1e-12);
  }
}

TEST(CircuitTest, CircuitUnitaryMatchesKroneckerOracle) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = random_circuit(4, 30, rng);
    EXPECT_LT(diff(circuit_unitary(c), oracle::unitary(c)), 1e-12);
  }
}

TEST(CircuitTest, CostTable) {
  EXPECT_EQ(cnot_cost(GateKind::X), 0);
  EXPECT_EQ(cnot_cost(GateKind::Ry), 0);
  EXPECT_EQ(cnot_cost(GateKind::CNOT), 1);
  EXPECT_EQ(cnot_cost(GateKind::CZ), 1);
  EXPECT_EQ(cnot_cost(GateKind::CRy), 2);
  EXPECT_EQ(cnot_cost(GateKind::CRz), 2);
  EXPECT_EQ(cnot_cost(GateKind::CPhase), 2);
  EXPECT_EQ(cnot_cost(GateKind::Gamma), 2);
  EXPECT_EQ(cnot_cost(GateKind::Toffoli), 6);
  EXPECT_EQ(cnot_cost(GateKind::CGamma), 14);
}

TEST(CircuitTest, CountAgreesWithLoweredCircuit) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Circuit c = random_circuit(5, 40, rng);
    const auto r = count(c);
    const auto low = count(lower(c));
    EXPECT_EQ(r.cnot_equivalent, low.cnot + low.cz);
    EXPECT_EQ(r.cnot_equivalent, low.cnot_equivalent);
    EXPECT_EQ(r.single_qubit, low.single_qubit);
    long toff = 0;
    for (const auto& g : c.gates()) toff += g.kind == GateKind::Toffoli;
    EXPECT_EQ(r.toffoli, toff);
  }
}

TEST(CircuitTest, ControlMatchesProjectorOracle) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (auto kind : {GateKind::X, GateKind::Ry, GateKind::Rz, GateKind::Phase,
                    GateKind::CNOT, GateKind::Gamma}) {
    const double a = ang(rng);
    Circuit base(3);
    if (gate_arity(kind) == 1)
      base.add(Gate{kind, {1}, a});
    else
      base.add(Gate{kind, {1, 2}, a});
    const Circuit cc = control(base, 0);
    // |0><0| x I + |1><1| x U on control qubit 0
    const Mat u = oracle::unitary(base);
    Mat want = Mat::Zero(8, 8);
    for (int r = 0; r < 8; ++r)
      for (int col = 0; col < 8; ++col)
        if ((r & 1) == (col & 1)) want(r, col) = (r & 1) ? u(r, col) : C(r == col ? 1 : 0);
    EXPECT_LT(diff(oracle::unitary(lower(cc)), want), 1e-13) << gate_name(kind);
  }
  EXPECT_THROW(control(Gate{GateKind::H, {1}, 0}, 0), DomainError);
  EXPECT_THROW(control(Gate{GateKind::X, {0}, 0}, 0), DomainError);
}

TEST(CircuitTest, InverseUndoesCircuit) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = random_circuit(5, 30, rng);
    const Mat u = oracle::unitary(compose(c, c.inverse()));
    EXPECT_LT(diff(u, Mat::Identity(32, 32)), 1e-12);
  }
  Circuit g(2);
  g.gamma(0, 1, 0.3);
  for (const auto& x : g.inverse().gates()) EXPECT_NE(x.kind, GateKind::Gamma);
}

TEST(CircuitTest, AppendWithMap) {
  Circuit small(2);
  small.cnot(0, 1);
  Circuit big(4);
  const int map[] = {3, 1};
  big.append(small, map);
  ASSERT_EQ(big.size(), 1u);
  EXPECT_EQ(big.gates()[0].qubits, (std::vector<int>{3, 1}));
  EXPECT_THROW(big.append(Circuit(3)), DomainError);
}

TEST(CircuitTest, Registers) {
  Circuit c(5);
  c.add_register("anc", 0, 2);
  c.add_register("sys", 2, 3);
  EXPECT_EQ(c.reg("sys").start, 2);
  EXPECT_TRUE(c.has_register("anc"));
  EXPECT_FALSE(c.has_register("foo"));
  EXPECT_THROW(c.reg("foo"), DomainError);
  EXPECT_THROW(c.add_register("bad", 4, 2), DomainError);
}

TEST(CircuitTest, QasmRoundTrip) {
  std::mt19937_64 rng(9);
  Circuit c = lower(random_circuit(5, 40, rng));
  c.add_register("a", 0, 2);
  c.add_register("s", 2, 3);
  const auto text = export_qasm(c);
  const auto back = parse_qasm(text);
  ASSERT_EQ(back.width(), c.width());
  ASSERT_EQ(back.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(back.gates()[i].kind, c.gates()[i].kind);
    EXPECT_EQ(back.gates()[i].qubits, c.gates()[i].qubits);
    EXPECT_DOUBLE_EQ(back.gates()[i].angle, c.gates()[i].angle);
  }
}

TEST(CircuitTest, QasmParsesPiExpressions) {
  const auto c = parse_qasm(
      "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n"
      "ry(pi/2) q[0]; // comment\nrz(-3*pi/4) q[1];\ncx q[0],q[1];\n");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_NEAR(c.gates()[0].angle, kPi / 2, 1e-15);
  EXPECT_NEAR(c.gates()[1].angle, -3 * kPi / 4, 1e-15);
  EXPECT_THROW(parse_qasm("qreg q[1];\nfoo q[0];"), ParseError);
  EXPECT_THROW(parse_qasm("qreg q[1];\nx r[0];"), ParseError);
}

TEST(CircuitTest, QasmRejectsUnloweredGates) {
  Circuit c(2);
  c.gamma(0, 1, 0.1);
  EXPECT_THROW(export_qasm(c), DomainError);
}

}  // namespace
}  // namespace foqcs
