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

#include "foqcs/statevector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "foqcs/errors.hpp"

namespace foqcs {

namespace {

using Mat2 = std::array<Complex, 4>;  // row-major

const Complex kI(0, 1);

Mat2 matrix_of(GateKind kind, double a) {
  switch (kind) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::Toffoli:
      return {0, 1, 1, 0};
    case GateKind::H: {
      const double r = 1 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case GateKind::S: return {1, 0, 0, kI};
    case GateKind::Sdg: return {1, 0, 0, -kI};
    case GateKind::Ry:
    case GateKind::CRy: {
      const double c = std::cos(a / 2), s = std::sin(a / 2);
      return {c, -s, s, c};
    }
    case GateKind::Rz:
    case GateKind::CRz:
      return {std::exp(-kI * (a / 2)), 0, 0, std::exp(kI * (a / 2))};
    case GateKind::Phase:
    case GateKind::CPhase:
      return {1, 0, 0, std::exp(kI * a)};
    case GateKind::CZ: return {1, 0, 0, -1};
    default:
      throw DomainError("no 2x2 matrix for composite gate");
  }
}

// Applies m to `target` on every basis state whose `controls` bits are set.
void apply_controlled(StateVector& psi, int target, std::span<const int> controls,
                      const Mat2& m) {
  const int w = psi.width();
  std::array<int, 4> pos{};
  int npos = 0;
  std::uint64_t cmask = 0;
  for (int c : controls) {
    pos[npos++] = c;
    cmask |= 1ULL << c;
  }
  pos[npos++] = target;
  std::sort(pos.begin(), pos.begin() + npos);
  const std::uint64_t tbit = 1ULL << target;
  const std::uint64_t count = 1ULL << (w - npos);
  auto amps = psi.amplitudes();
  const bool diagonal = m[1] == Complex(0) && m[2] == Complex(0);
  const bool is_x = !diagonal && m[0] == Complex(0) && m[3] == Complex(0) &&
                    m[1] == Complex(1) && m[2] == Complex(1);

  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t i = k;
    for (int p = 0; p < npos; ++p) {
      const std::uint64_t low = i & ((1ULL << pos[p]) - 1);
      i = ((i >> pos[p]) << (pos[p] + 1)) | low;
    }
    i |= cmask;
    const std::uint64_t j = i | tbit;
    if (diagonal) {
      if (m[0] != Complex(1)) amps[i] *= m[0];
      amps[j] *= m[3];
    } else if (is_x) {
      std::swap(amps[i], amps[j]);
    } else {
      const Complex a0 = amps[i], a1 = amps[j];
      amps[i] = m[0] * a0 + m[1] * a1;
      amps[j] = m[2] * a0 + m[3] * a1;
    }
  }
}

void check_width(int w) {
  if (w > max_width())
    throw ResourceError("circuit width " + std::to_string(w) +
                        " exceeds the simulator limit of " +
                        std::to_string(max_width()));
}

}  // namespace

int max_width() {
  if (const char* env = std::getenv("FOQCS_MAX_WIDTH")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0 && v <= 40) return static_cast<int>(v);
  }
  return kDefaultMaxWidth;
}

StateVector::StateVector(int width) : width_(width) {
  check_width(width);
  amps_.assign(1ULL << width, Complex(0));
  amps_[0] = 1;
}

StateVector::StateVector(int width, std::vector<Complex> amps)
    : width_(width), amps_(std::move(amps)) {
  check_width(width);
  if (amps_.size() != (1ULL << width))
    throw DomainError("amplitude count does not match 2^width");
}

StateVector StateVector::basis(int width, std::uint64_t index) {
  StateVector s(width);
  if (index >= s.dim()) throw DomainError("basis index out of range");
  s.amps_[0] = 0;
  s.amps_[index] = 1;
  return s;
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void apply_gate(const Gate& g, StateVector& psi) {
  const auto& q = g.qubits;
  for (int x : q)
    if (x < 0 || x >= psi.width()) throw DomainError("gate operand out of range");
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::Phase:
      apply_controlled(psi, q[0], {}, matrix_of(g.kind, g.angle));
      break;
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::CRy:
    case GateKind::CRz:
    case GateKind::CPhase:
      apply_controlled(psi, q[1], std::span<const int>(q.data(), 1),
                       matrix_of(g.kind, g.angle));
      break;
    case GateKind::Toffoli:
      apply_controlled(psi, q[2], std::span<const int>(q.data(), 2),
                       matrix_of(GateKind::X, 0));
      break;
    case GateKind::Gamma: {
      const int lo = q[0], hi = q[1];
      apply_controlled(psi, hi, std::array{lo}, matrix_of(GateKind::Ry, g.angle));
      apply_controlled(psi, lo, std::array{hi}, matrix_of(GateKind::X, 0));
      break;
    }
    case GateKind::CGamma: {
      const int c = q[0], lo = q[1], hi = q[2];
      apply_controlled(psi, hi, std::array{c, lo},
                       matrix_of(GateKind::Ry, g.angle));
      apply_controlled(psi, lo, std::array{c, hi}, matrix_of(GateKind::X, 0));
      break;
    }
  }
}

void apply_circuit(const Circuit& c, StateVector& psi) {
  if (c.width() != psi.width())
    throw DomainError("state width " + std::to_string(psi.width()) +
                      " does not match circuit width " +
                      std::to_string(c.width()));
  for (const auto& g : c.gates()) apply_gate(g, psi);
}

StateVector simulate(const Circuit& c, StateVector init) {
  check_width(c.width());
  apply_circuit(c, init);
  return init;
}

StateVector simulate(const Circuit& c) { return simulate(c, StateVector(c.width())); }

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  if (c.width() > 12) throw ResourceError("circuit_unitary is limited to 12 qubits");
  const std::uint64_t dim = 1ULL << c.width();
  Eigen::MatrixXcd u(dim, dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    const auto psi = simulate(c, StateVector::basis(c.width(), b));
    for (std::uint64_t r = 0; r < dim; ++r) u(r, b) = psi[r];
  }
  return u;
}

namespace {

int checked_ancilla_width(const BlockEncoding& be) {
  check_width(be.circuit.width());
  const auto& sys = be.system();
  if (sys.start + sys.size != be.circuit.width())
    throw DomainError("system register must occupy the highest qubits");
  return sys.start;
}

}  // namespace

BlockReport extract_block(const BlockEncoding& be,
                          const Eigen::MatrixXcd* reference) {
  const int anc = checked_ancilla_width(be);
  const int n = be.system().size;
  const std::uint64_t dim = 1ULL << n;
  BlockReport rep;
  rep.block.resize(dim, dim);
  rep.postselect_probability.resize(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    const auto psi =
        simulate(be.circuit, StateVector::basis(be.circuit.width(), b << anc));
    double p = 0;
    for (std::uint64_t r = 0; r < dim; ++r) {
      rep.block(r, b) = psi[r << anc];
      p += std::norm(psi[r << anc]);
    }
    rep.postselect_probability[b] = p;
  }
  if (reference) {
    if (reference->rows() != static_cast<Eigen::Index>(dim) ||
        reference->cols() != static_cast<Eigen::Index>(dim))
      throw DomainError("reference matrix has the wrong shape");
    rep.max_abs_error = (rep.block - *reference).cwiseAbs().maxCoeff();
  }
  return rep;
}

double postselect_probability(const BlockEncoding& be,
                              const Eigen::VectorXcd& phi) {
  const int anc = checked_ancilla_width(be);
  const std::uint64_t dim = 1ULL << be.system().size;
  if (phi.size() != static_cast<Eigen::Index>(dim))
    throw DomainError("input state has the wrong dimension");
  StateVector psi(be.circuit.width());
  psi[0] = 0;
  for (std::uint64_t b = 0; b < dim; ++b) psi[b << anc] = phi(b);
  apply_circuit(be.circuit, psi);
  double p = 0;
  for (std::uint64_t r = 0; r < dim; ++r) p += std::norm(psi[r << anc]);
  return p;
}

StateReport compare_states(const StateVector& got,
                           const std::map<std::uint64_t, Complex>& expected,
                           double tol) {
  StateReport rep;
  auto note = [&](std::uint64_t idx, Complex want, Complex have) {
    const double d = std::abs(want - have);
    rep.max_deviation = std::max(rep.max_deviation, d);
    if (d > tol) {
      rep.ok = false;
      if (rep.failures.size() < 16) {
        std::ostringstream os;
        os << "index " << idx << ": expected " << want << ", got " << have;
        rep.failures.push_back(os.str());
      }
    }
  };
  for (const auto& [idx, want] : expected) {
    if (idx >= got.dim()) {
      rep.ok = false;
      rep.failures.push_back("expected index " + std::to_string(idx) +
                             " outside the state");
      continue;
    }
    note(idx, want, got[idx]);
  }
  for (std::uint64_t i = 0; i < got.dim(); ++i)
    if (!expected.count(i)) note(i, 0, got[i]);
  return rep;
}

StateReport assert_state(const Circuit& c,
                         const std::map<std::uint64_t, Complex>& expected,
                         double tol) {
  return compare_states(simulate(c), expected, tol);
}

}  // namespace foqcs
