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

#include "foqcs/baseline.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "foqcs/errors.hpp"

namespace foqcs {

namespace {

constexpr double kRotTol = 1e-14;

// Uniformly controlled rotation on `target`: angle[j] applies when the
// controls read j (bit b of j is qubit controls[b]).
void append_multiplexed(Circuit& c, GateKind rot, int target,
                        const std::vector<int>& controls,
                        const std::vector<double>& angles) {
  bool any = false;
  for (double a : angles) any = any || std::abs(a) > kRotTol;
  if (!any) return;
  const int k = static_cast<int>(controls.size());
  if (k == 0) {
    c.add(rot, {target}, angles[0]);
    return;
  }
  const std::size_t count = std::size_t{1} << k;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t gray = i ^ (i >> 1);
    double t = 0;
    for (std::size_t j = 0; j < count; ++j)
      t += (std::popcount(j & gray) & 1) ? -angles[j] : angles[j];
    t /= static_cast<double>(count);
    if (std::abs(t) > kRotTol) c.add(rot, {target}, t);
    const int bit = i + 1 < count ? std::countr_zero(i + 1) : k - 1;
    c.cnot(controls[bit], target);
  }
}

}  // namespace

Circuit generic_state_prep(std::span<const std::complex<double>> amps) {
  const std::size_t dim = amps.size();
  if (dim == 0 || !std::has_single_bit(dim))
    throw DomainError("state preparation needs a power-of-two length");
  double s = 0;
  for (const auto& a : amps) s += std::norm(a);
  if (std::abs(s - 1) > 1e-10)
    throw DomainError("state preparation needs a normalized amplitude vector");
  const int c = std::countr_zero(dim);
  Circuit circ(c);
  if (c == 0) return circ;

  // Phases, reduced level by level from qubit 0 upward.
  std::vector<double> omega(dim);
  for (std::size_t m = 0; m < dim; ++m)
    omega[m] = std::abs(amps[m]) > 0 ? std::arg(amps[m]) : 0.0;
  std::vector<std::vector<double>> rz_angles(c);
  for (int t = 0; t < c; ++t) {
    const std::size_t half = omega.size() / 2;
    std::vector<double> next(half);
    rz_angles[t].resize(half);
    for (std::size_t h = 0; h < half; ++h) {
      rz_angles[t][h] = omega[2 * h + 1] - omega[2 * h];
      next[h] = (omega[2 * h] + omega[2 * h + 1]) / 2;
    }
    omega = std::move(next);
  }
  const double global = omega[0];
  if (std::abs(global) > kRotTol) {
    // Acts as e^{i global} on the |0...0> input.
    circ.x(0).phase(0, global).x(0);
  }

  // Magnitudes, top qubit first.
  std::vector<double> weight(dim);
  for (std::size_t m = 0; m < dim; ++m) weight[m] = std::norm(amps[m]);
  for (int t = c - 1; t >= 0; --t) {
    const std::size_t prefixes = dim >> (t + 1);
    const std::size_t block = std::size_t{1} << t;
    std::vector<double> angles(prefixes);
    for (std::size_t p = 0; p < prefixes; ++p) {
      double s0 = 0, s1 = 0;
      const std::size_t base = p << (t + 1);
      for (std::size_t r = 0; r < block; ++r) {
        s0 += weight[base + r];
        s1 += weight[base + block + r];
      }
      angles[p] = 2 * std::atan2(std::sqrt(s1), std::sqrt(s0));
    }
    std::vector<int> controls(c - 1 - t);
    std::iota(controls.begin(), controls.end(), t + 1);
    append_multiplexed(circ, GateKind::Ry, t, controls, angles);
  }

  for (int t = 0; t < c; ++t) {
    std::vector<int> controls(c - 1 - t);
    std::iota(controls.begin(), controls.end(), t + 1);
    append_multiplexed(circ, GateKind::Rz, t, controls, rz_angles[t]);
  }
  return circ;
}

BaselineEncoding standard_lcu(const PauliSum& h) {
  const int n = h.num_qubits();
  const int M = static_cast<int>(h.size());
  if (M < 1) throw DomainError("Hamiltonian has no terms");
  const int c = M == 1 ? 0 : std::bit_width(static_cast<unsigned>(M - 1));
  const int w = c >= 2 ? c - 1 : 0;
  const double norm = one_norm(h);

  BaselineEncoding out;
  out.index_ancillas = c;
  out.work_ancillas = w;
  out.encoding.normalization = norm;
  Circuit circ(c + w + n);
  if (c > 0) circ.add_register("index", 0, c);
  if (w > 0) circ.add_register("work", c, w);
  circ.add_register("system", c + w, n);
  const int sys = c + w;

  auto apply_string = [&](const PauliTerm& t, int ctrl) {
    for (int l = 0; l < n; ++l) {
      const int q = sys + l;
      switch (t.ops[l]) {
        case Pauli::I: break;
        case Pauli::X:
          ctrl < 0 ? circ.x(q) : circ.cnot(ctrl, q);
          break;
        case Pauli::Z:
          ctrl < 0 ? circ.phase(q, std::numbers::pi) : circ.cz(ctrl, q);
          break;
        case Pauli::Y:
          circ.sdg(q);
          ctrl < 0 ? circ.x(q) : circ.cnot(ctrl, q);
          circ.s(q);
          break;
      }
    }
  };

  if (c == 0) {
    const auto& t = h.terms()[0];
    apply_string(t, -1);
    const double phi = std::arg(t.coefficient);
    if (std::abs(phi) > kRotTol) circ.phase(sys, phi).x(sys).phase(sys, phi).x(sys);
    out.encoding.circuit = std::move(circ);
    return out;
  }

  std::vector<std::complex<double>> amps(std::size_t{1} << c);
  for (int m = 0; m < M; ++m) amps[m] = std::sqrt(h.terms()[m].coefficient / norm);
  std::vector<std::complex<double>> conj_amps(amps.size());
  for (std::size_t m = 0; m < amps.size(); ++m) conj_amps[m] = std::conj(amps[m]);
  std::vector<int> index(c);
  std::iota(index.begin(), index.end(), 0);

  circ.append(generic_state_prep(amps), index);
  for (int m = 0; m < M; ++m) {
    const auto& t = h.terms()[m];
    bool identity = true;
    for (auto p : t.ops) identity = identity && p == Pauli::I;
    if (identity) continue;
    for (int b = 0; b < c; ++b)
      if (!((m >> b) & 1)) circ.x(b);
    int ctrl = 0;
    if (c >= 2) {
      circ.toffoli(0, 1, c);
      for (int i = 1; i < c - 1; ++i) circ.toffoli(i + 1, c + i - 1, c + i);
      ctrl = c + c - 2;
    }
    apply_string(t, ctrl);
    if (c >= 2) {
      for (int i = c - 2; i >= 1; --i) circ.toffoli(i + 1, c + i - 1, c + i);
      circ.toffoli(0, 1, c);
    }
    for (int b = 0; b < c; ++b)
      if (!((m >> b) & 1)) circ.x(b);
  }
  circ.append(generic_state_prep(conj_amps).inverse(), index);
  out.encoding.circuit = std::move(circ);
  return out;
}

}  // namespace foqcs
