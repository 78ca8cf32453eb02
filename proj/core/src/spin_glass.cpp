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

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "foqcs/encoder.hpp"
#include "foqcs/errors.hpp"

namespace foqcs {

namespace {

constexpr double kSkipTol = 1e-14;

// One nonzero diagonal k of one axis: a single excitation on subPR qubit
// `ctrl` selects this block of the coefficient matrix.
struct Branch {
  Axis axis;
  int k;
  int ctrl;
  Complex subpr_amp;
  std::vector<Complex> diag;  // length n - k
};

std::vector<Branch> active_branches(const SpinGlassParams& p, bool conjugate) {
  const int n = p.n;
  const double norm = p.normalization();
  std::array<CoefficientMatrix, 3> cm{coefficient_matrix(p, kAxisX),
                                      coefficient_matrix(p, kAxisY),
                                      coefficient_matrix(p, kAxisZ)};
  std::vector<Branch> out;
  // Wire order top-to-bottom: x_k, z_k, y_k for k = 0, 1, ...
  for (int k = 0; k < n; ++k)
    for (Axis a : {kAxisX, kAxisZ, kAxisY}) {
      const double nk = cm[a].diag_norms[k];
      if (nk < kSkipTol) continue;
      Complex amp;
      if (a == kAxisY)
        amp = std::sqrt((k == 0 ? Complex(0, -1) : Complex(-1)) * (nk / norm));
      else
        amp = std::sqrt(Complex(nk / norm));
      out.push_back(Branch{a, k, 0, amp, cm[a].normalized_diagonal(k)});
    }
  const int m = static_cast<int>(out.size());
  for (int b = 0; b < m; ++b) {
    out[b].ctrl = m - 1 - b;
    if (conjugate) {
      out[b].subpr_amp = std::conj(out[b].subpr_amp);
      for (auto& d : out[b].diag) d = std::conj(d);
    }
  }
  return out;
}

std::vector<int> range_of(int start, int size) {
  std::vector<int> v(size);
  std::iota(v.begin(), v.end(), start);
  return v;
}

// Unbalanced single-excitation state on `qubits`, any size >= 1.
void append_dicke1(Circuit& c, const std::vector<Complex>& amps,
                   const std::vector<int>& qubits) {
  const AmplitudeList a(amps);
  if (a.size() == 1) {
    c.x(qubits[0]);
    append_phases(c, std::vector<double>{std::arg(a[0])}, qubits);
    return;
  }
  c.append(prepare_dicke1(a), qubits);
}

}  // namespace

Circuit spin_glass_pr(const SpinGlassParams& p, bool compressed, bool conjugate) {
  p.validate();
  const int n = p.n;
  const auto branches = active_branches(p, conjugate);
  const int m = static_cast<int>(branches.size());
  Circuit c(m + 2 * n);
  c.add_register("subpr", 0, m);
  c.add_register("x_anc", m, n);
  c.add_register("z_anc", m + n, n);
  const auto X = range_of(m, n);
  const auto Z = range_of(m + n, n);

  std::vector<Complex> sub(m);
  for (const auto& b : branches) sub[b.ctrl] = b.subpr_amp;
  append_dicke1(c, sub, range_of(0, m));

  if (!compressed) {
    std::vector<int> xz = X;
    xz.insert(xz.end(), Z.begin(), Z.end());
    for (const auto& b : branches) {
      const AmplitudeList a(b.diag);
      Circuit body;
      if (b.axis == kAxisY)
        body = prepare_double(n, b.k == 0 ? DoubleKind::Single : DoubleKind::Pair,
                              b.k, a);
      else
        body = b.k == 0 ? prepare_dicke1(a) : prepare_dicke2k(n, b.k, a);
      const auto& map = b.axis == kAxisY ? xz : (b.axis == kAxisX ? X : Z);
      Circuit placed(c.width());
      placed.append(body, map);
      c.append(control(placed, b.ctrl));
    }
    return c;
  }

  constexpr double kHalfPi = std::numbers::pi / 2;
  struct Plan {
    const Branch* branch;
    DickeAngles angles;
  };
  std::vector<Plan> plans;
  for (const auto& b : branches) plans.push_back({&b, unbalanced_angles(AmplitudeList(b.diag))});

  for (const bool is_x : {true, false}) {
    const auto& reg = is_x ? X : Z;
    auto on_reg = [&](const Branch& b) {
      return is_x ? b.axis != kAxisZ : b.axis == kAxisZ;
    };
    for (int q = 0; q < n; ++q) {
      for (const auto& pl : plans)
        if (on_reg(*pl.branch) && pl.branch->k == q) c.cnot(pl.branch->ctrl, reg[q]);
      if (q == n - 1) break;
      // Shared fixed gates of the 2-CNOT Gamma, with one controlled pair of
      // Rz per branch whose staircase reaches (q, q + 1).
      std::vector<std::pair<int, double>> rot;
      for (const auto& pl : plans) {
        const auto& b = *pl.branch;
        if (!on_reg(b) || b.k > q) continue;
        const int len = n - b.k;
        const int l = len - 1 - (q - b.k);
        rot.emplace_back(b.ctrl, pl.angles.thetas[l - 1]);
      }
      const int lo = reg[q], hi = reg[q + 1];
      c.s(hi).h(hi);
      for (auto [ctrl, t] : rot) c.add(GateKind::CRz, {ctrl, hi}, kHalfPi - t / 2);
      c.cnot(hi, lo);
      for (auto [ctrl, t] : rot) c.add(GateKind::CRz, {ctrl, lo}, t / 2 - kHalfPi);
      c.h(hi).h(lo).sdg(lo);
      c.cnot(hi, lo);
      c.s(hi).h(hi);
    }
  }

  for (const auto& pl : plans) {
    const auto& b = *pl.branch;
    const auto& reg = b.axis == kAxisZ ? Z : X;
    for (std::size_t l = 0; l < pl.angles.etas.size(); ++l)
      if (std::abs(pl.angles.etas[l]) > kAngleTol)
        c.add(GateKind::CPhase, {b.ctrl, reg[l + b.k]}, pl.angles.etas[l]);
  }

  auto find = [&](Axis a, int k) -> const Branch* {
    for (const auto& b : branches)
      if (b.axis == a && b.k == k) return &b;
    return nullptr;
  };
  auto controlled_ladder = [&](int ctrl, const std::vector<int>& reg, int k) {
    for (int q = 0; q + k < n; ++q) c.toffoli(ctrl, reg[q + k], reg[q]);
  };

  for (int k = 1; k < n; ++k) {
    const Branch* bx = find(kAxisX, k);
    const Branch* by = find(kAxisY, k);
    const Branch* bz = find(kAxisZ, k);
    if (bx && by) {
      c.cnot(bx->ctrl, by->ctrl);
      controlled_ladder(by->ctrl, X, k);
      c.cnot(bx->ctrl, by->ctrl);
    } else if (bx || by) {
      controlled_ladder((bx ? bx : by)->ctrl, X, k);
    }
    if (bz) controlled_ladder(bz->ctrl, Z, k);
  }

  std::vector<int> ys;
  for (int k = 0; k < n; ++k)
    if (const Branch* by = find(kAxisY, k)) ys.push_back(by->ctrl);
  if (!ys.empty()) {
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) c.cnot(ys[i], ys[i + 1]);
    for (int q = 0; q < n; ++q) c.toffoli(ys.back(), X[q], Z[q]);
    for (std::size_t i = ys.size() - 1; i-- > 0;) c.cnot(ys[i], ys[i + 1]);
  }
  return c;
}

BlockEncoding spin_glass_encoding(const SpinGlassParams& p) {
  p.validate();
  const int n = p.n;
  const Circuit pr = spin_glass_pr(p, true, false);
  const Circuit pl = spin_glass_pr(p, true, true);
  const int anc = pr.width();
  const int m = pr.reg("subpr").size;
  BlockEncoding be;
  be.normalization = p.normalization();
  be.circuit = Circuit(anc + n);
  auto& c = be.circuit;
  c.add_register("subpr", 0, m);
  c.add_register("x_anc", m, n);
  c.add_register("z_anc", m + n, n);
  c.add_register("system", anc, n);
  const auto map = range_of(0, anc);
  c.append(pr, map);
  append_select(c, c.reg("x_anc"), c.reg("z_anc"), c.reg("system"));
  c.append(pl.inverse(), map);
  return be;
}

}  // namespace foqcs
